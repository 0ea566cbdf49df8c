#include "segcover/mst_partition.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "segcover/error.hpp"
#include "segcover/union_find.hpp"

namespace segcover {
namespace {

std::uint64_t edge_key(ElementId u, ElementId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::size_t vertex_index(const WeightedCoGraph& g, ElementId e) {
  return static_cast<std::size_t>(
      std::lower_bound(g.vertices.begin(), g.vertices.end(), e) - g.vertices.begin());
}

}  // namespace

WeightedCoGraph build_cograph(const Instance& inst, int threads) {
  return build_cograph(inst, SuccinctSet::full(inst.universe_size()), threads);
}

WeightedCoGraph build_cograph(const Instance& inst, const SuccinctSet& vertices, int threads) {
  if (vertices.capacity() != inst.universe_size()) {
    throw UsageError("vertex set does not match the instance universe");
  }
  threads = std::max(1, threads);
  const auto m = static_cast<std::ptrdiff_t>(inst.subset_count());
  std::vector<std::vector<std::uint64_t>> buffers(static_cast<std::size_t>(threads));

#pragma omp parallel num_threads(threads)
  {
    auto& keys = buffers[static_cast<std::size_t>(omp_get_thread_num())];
    std::vector<ElementId> inside;
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t j = 0; j < m; ++j) {
      inside.clear();
      for (const ElementId e : inst.members(static_cast<SubsetId>(j))) {
        if (vertices.test(e)) inside.push_back(e);
      }
      for (std::size_t a = 0; a < inside.size(); ++a) {
        for (std::size_t b = a + 1; b < inside.size(); ++b) {
          keys.push_back(edge_key(inside[a], inside[b]));
        }
      }
    }
  }

  std::vector<std::uint64_t> all;
  for (auto& b : buffers) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());

  WeightedCoGraph g;
  g.vertices = vertices.to_vector();
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    g.edges.push_back({static_cast<ElementId>(all[i] >> 32),
                       static_cast<ElementId>(all[i] & 0xFFFFFFFFULL),
                       static_cast<std::uint32_t>(j - i)});
    i = j;
  }
  return g;
}

WeightedCoGraph build_cograph_serial(const Instance& inst, const SuccinctSet& vertices) {
  std::map<std::pair<ElementId, ElementId>, std::uint32_t> weight;
  for (SubsetId j = 0; j < inst.subset_count(); ++j) {
    const auto members = inst.members(j);
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (!vertices.test(members[a])) continue;
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (vertices.test(members[b])) ++weight[{members[a], members[b]}];
      }
    }
  }
  WeightedCoGraph g;
  g.vertices = vertices.to_vector();
  for (const auto& [uv, w] : weight) g.edges.push_back({uv.first, uv.second, w});
  return g;
}

std::vector<WeightedEdge> maximum_spanning_tree(const WeightedCoGraph& g) {
  std::vector<WeightedEdge> sorted = g.edges;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const WeightedEdge& a, const WeightedEdge& b) { return a.weight > b.weight; });
  UnionFind uf(g.vertices.size());
  std::vector<WeightedEdge> tree;
  for (const WeightedEdge& e : sorted) {
    const auto a = static_cast<std::uint32_t>(vertex_index(g, e.u));
    const auto b = static_cast<std::uint32_t>(vertex_index(g, e.v));
    if (uf.unite(a, b)) tree.push_back(e);
  }
  if (g.vertices.size() > 1 && tree.size() + 1 != g.vertices.size()) {
    throw UsageError("co-occurrence graph is disconnected; no spanning tree exists");
  }
  return tree;
}

Bipartition mst_bipartition(const WeightedCoGraph& g) {
  if (g.vertices.size() < 2) throw UsageError("bipartition needs at least two vertices");
  Bipartition bp;
  bp.tree = maximum_spanning_tree(g);

  const std::size_t nv = g.vertices.size();
  struct Arc {
    std::size_t to;
    std::size_t edge;
  };
  std::vector<std::vector<Arc>> adj(nv);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < bp.tree.size(); ++i) {
    const std::size_t a = vertex_index(g, bp.tree[i].u);
    const std::size_t b = vertex_index(g, bp.tree[i].v);
    adj[a].push_back({b, i});
    adj[b].push_back({a, i});
    total += bp.tree[i].weight;
  }

  // Root at the smallest vertex; `below[x]` is the tree weight inside x's subtree.
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(nv, kNone);
  std::vector<std::size_t> parent_edge(nv, kNone);
  std::vector<std::size_t> preorder;
  preorder.reserve(nv);
  preorder.push_back(0);
  parent[0] = 0;
  for (std::size_t k = 0; k < preorder.size(); ++k) {
    const std::size_t x = preorder[k];
    for (const Arc& arc : adj[x]) {
      if (parent[arc.to] != kNone) continue;
      parent[arc.to] = x;
      parent_edge[arc.to] = arc.edge;
      preorder.push_back(arc.to);
    }
  }
  std::vector<std::uint64_t> below(nv, 0);
  for (std::size_t k = preorder.size(); k-- > 1;) {
    const std::size_t x = preorder[k];
    below[parent[x]] += below[x] + bp.tree[parent_edge[x]].weight;
  }

  std::vector<std::size_t> child_of_edge(bp.tree.size());
  for (std::size_t x = 1; x < nv; ++x) child_of_edge[parent_edge[x]] = x;

  std::size_t best = 0;
  auto imbalance = [](const CandidateCut& c) {
    return c.first_weight > c.second_weight ? c.first_weight - c.second_weight
                                            : c.second_weight - c.first_weight;
  };
  for (std::size_t i = 0; i < bp.tree.size(); ++i) {
    const std::size_t child = child_of_edge[i];
    CandidateCut cut{bp.tree[i], total - below[child] - bp.tree[i].weight, below[child]};
    bp.candidates.push_back(cut);
    const CandidateCut& incumbent = bp.candidates[best];
    const auto d = imbalance(cut);
    const auto d_best = imbalance(incumbent);
    if (d < d_best || (d == d_best && (cut.edge.weight < incumbent.edge.weight ||
                                       (cut.edge.weight == incumbent.edge.weight &&
                                        std::pair(cut.edge.u, cut.edge.v) <
                                            std::pair(incumbent.edge.u, incumbent.edge.v))))) {
      best = i;
    }
  }

  const CandidateCut& chosen = bp.candidates[best];
  bp.cut = chosen.edge;
  bp.weights = {chosen.first_weight, chosen.second_weight};
  // Everything in the child's subtree goes to the second side.
  const std::size_t cut_child = child_of_edge[best];
  std::vector<bool> second(nv, false);
  second[cut_child] = true;
  for (const std::size_t x : preorder) {
    if (x != 0 && x != cut_child && second[parent[x]]) second[x] = true;
  }
  for (std::size_t x = 0; x < nv; ++x) bp.sides[second[x] ? 1 : 0].push_back(g.vertices[x]);
  return bp;
}

Segmentation bipartition_segmentation(const Instance& inst, const Bipartition& bp) {
  Segmentation seg;
  seg.universe = inst.universe_size();
  for (const auto& side : bp.sides) seg.components.push_back(restrict_to(inst, side));
  return seg;
}

Cover grasp_mst_solve(const Instance& inst, const SuParams& params) {
  if (find_groups(inst).components.size() > 1) {
    throw UsageError("instance is segmentable; use union-find segmentation (grasp-uf)");
  }
  SuParams mst = params;
  mst.source = SegmentationSource::mst_bipartition;
  return grasp_su_run(inst, mst).cover;
}

std::string mst_diagnostics(const Bipartition& bp) {
  std::ostringstream out;
  out << "tree_u,tree_v,weight\n";
  for (const auto& e : bp.tree) out << e.u << ',' << e.v << ',' << e.weight << '\n';
  out << "cut_u,cut_v,weight,w1,w2\n";
  for (const auto& c : bp.candidates) {
    out << c.edge.u << ',' << c.edge.v << ',' << c.edge.weight << ',' << c.first_weight << ','
        << c.second_weight << '\n';
  }
  return out.str();
}

}  // namespace segcover
