#pragma once

// Forced balanced bipartition of the universe through a maximum spanning tree
// of the weighted co-occurrence graph. This strategy is known to give worse
// covers than plain GRASP: subsets spanning both sides get split, so the two
// halves are not independent. It is kept as a comparison baseline.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "segcover/grasp_su.hpp"
#include "segcover/instance.hpp"
#include "segcover/segmentation.hpp"

namespace segcover {

struct WeightedEdge {
  ElementId u = 0;  // u < v
  ElementId v = 0;
  std::uint32_t weight = 0;  // number of subsets containing both

  auto operator<=>(const WeightedEdge&) const = default;
};

struct WeightedCoGraph {
  std::vector<ElementId> vertices;   // ascending element ids
  std::vector<WeightedEdge> edges;   // ascending by (u, v)
};

// Co-occurrence graph over every element.
WeightedCoGraph build_cograph(const Instance& inst, int threads = 1);
// Graph induced on `vertices`, with weights counted over the whole family.
WeightedCoGraph build_cograph(const Instance& inst, const SuccinctSet& vertices, int threads = 1);
// Ordered-map reference for the above.
WeightedCoGraph build_cograph_serial(const Instance& inst, const SuccinctSet& vertices);

// Kruskal on descending weight, ties by ascending (u, v). Throws UsageError if
// the graph is disconnected.
std::vector<WeightedEdge> maximum_spanning_tree(const WeightedCoGraph& g);

struct CandidateCut {
  WeightedEdge edge;
  std::uint64_t first_weight = 0;   // side holding the smallest vertex
  std::uint64_t second_weight = 0;
};

struct Bipartition {
  WeightedEdge cut;
  // sides[0] holds the smallest vertex. Both ascending and non-empty.
  std::array<std::vector<ElementId>, 2> sides;
  // Sum of tree-edge weights inside each side.
  std::array<std::uint64_t, 2> weights{};
  std::vector<WeightedEdge> tree;
  std::vector<CandidateCut> candidates;  // one per tree edge, tree order
};

// Removes the tree edge minimizing |W1 - W2|; ties go to the lighter edge,
// then to the smaller (u, v). Throws UsageError on a disconnected graph or
// fewer than two vertices.
Bipartition mst_bipartition(const WeightedCoGraph& g);

// The two sides as components; subsets crossing the cut are split.
Segmentation bipartition_segmentation(const Instance& inst, const Bipartition& bp);

// GRASP-SU with the bipartition in place of union-find. The merged cover
// records original (unsplit) subset ids. Throws UsageError if the instance is
// already disconnected (use union-find segmentation there).
Cover grasp_mst_solve(const Instance& inst, const SuParams& params);

// Tree edges and every candidate cut with its side weights.
std::string mst_diagnostics(const Bipartition& bp);

}  // namespace segcover
