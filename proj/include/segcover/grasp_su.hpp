#pragma once

#include <cstddef>
#include <vector>

#include "segcover/grasp.hpp"
#include "segcover/instance.hpp"
#include "segcover/segmentation.hpp"

namespace segcover {

enum class SegmentationSource { union_find, mst_bipartition };

struct SuParams {
  GraspParams grasp;
  int threads = 1;
  SegmentationSource source = SegmentationSource::union_find;
  // Give each component num_iter * |F_i| / |F| iterations (at least 1)
  // instead of the full count.
  bool scale_iterations = false;
};

struct PhaseTimes {
  double segment_ms = 0.0;
  double solve_ms = 0.0;
  double merge_ms = 0.0;
};

struct SuRun {
  Cover cover;  // merged and pruned
  std::size_t components = 0;
  std::vector<std::size_t> component_cardinalities;
  std::size_t merged_cardinality = 0;  // before the final pruning
  bool merged_feasible = false;        // checked before pruning; nothing repairs it
  PhaseTimes times;
};

// The improvement loop of sequential GRASP run on one component's cover.
// Returns the pruned input when num_iter == 0. Throws UsageError on an
// infeasible cover.
Cover local_search(const Instance& sub, const Cover& cover, const GraspParams& params, Rng& rng);

// Segment, solve every component independently on a worker pool, merge, prune.
// Component i draws from stream i of params.grasp.seed, so the result does not
// depend on the number of workers or on scheduling.
SuRun grasp_su_run(const Instance& inst, const SuParams& params);
Cover grasp_su_solve(const Instance& inst, const SuParams& params);

}  // namespace segcover
