#include "segcover/grasp_su.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <numeric>

#include "segcover/error.hpp"
#include "segcover/mst_partition.hpp"

namespace segcover {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

Cover solve_component(const Instance& sub, const GraspParams& params, Rng rng) {
  if (sub.universe_size() == 0) return Cover(0);
  RowMap rowmap = create_row_map_serial(sub);
  Cover initial = rand_construct(sub, Cover(sub.universe_size()),
                                 SuccinctSet::full(sub.universe_size()), rowmap, false, rng,
                                 params.eval_set);
  initial = remove_redundant_sets(sub, initial);
  return grasp_improve(sub, std::move(initial), params, rowmap, rng);
}

}  // namespace

Cover local_search(const Instance& sub, const Cover& cover, const GraspParams& params, Rng& rng) {
  validate(params);
  if (!cover_is_feasible(cover, sub)) throw UsageError("local_search: cover is infeasible");
  RowMap rowmap = create_row_map_serial(sub);
  return grasp_improve(sub, remove_redundant_sets(sub, cover), params, rowmap, rng);
}

SuRun grasp_su_run(const Instance& inst, const SuParams& params) {
  validate(params.grasp);
  if (params.threads < 1) throw UsageError("threads must be >= 1");
  SuRun run;

  auto t0 = Clock::now();
  Segmentation seg;
  if (params.source == SegmentationSource::union_find) {
    seg = find_groups(inst);
  } else {
    seg = bipartition_segmentation(inst, mst_bipartition(build_cograph(inst, params.threads)));
  }
  run.times.segment_ms = elapsed_ms(t0);
  run.components = seg.components.size();

  // Largest subfamilies first so the slowest components start early.
  std::vector<std::size_t> order(seg.components.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return seg.components[a].subsets.size() > seg.components[b].subsets.size();
  });

  t0 = Clock::now();
  std::vector<Cover> partials(seg.components.size());
  std::vector<std::exception_ptr> failures(seg.components.size());
  const auto count = static_cast<std::ptrdiff_t>(order.size());
#pragma omp parallel for num_threads(params.threads) schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const std::size_t c = order[i];
    try {
      const Instance& sub = seg.components[c].subinstance;
      GraspParams local = params.grasp;
      if (params.scale_iterations && inst.subset_count() > 0) {
        const double share = static_cast<double>(sub.subset_count()) /
                             static_cast<double>(inst.subset_count());
        local.num_iter = std::max<std::size_t>(
            1, static_cast<std::size_t>(
                   std::llround(share * static_cast<double>(params.grasp.num_iter))));
      }
      partials[c] = solve_component(sub, local, Rng::stream(params.grasp.seed, c));
    } catch (...) {
      failures[c] = std::current_exception();
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  run.times.solve_ms = elapsed_ms(t0);

  t0 = Clock::now();
  for (const Cover& p : partials) run.component_cardinalities.push_back(p.size());
  Cover merged = merge_partial_covers(inst, seg, partials);
  run.merged_cardinality = merged.size();
  run.merged_feasible = cover_is_feasible(merged, inst);
  run.cover = remove_redundant_sets(inst, merged);
  run.times.merge_ms = elapsed_ms(t0);
  return run;
}

Cover grasp_su_solve(const Instance& inst, const SuParams& params) {
  return grasp_su_run(inst, params).cover;
}

}  // namespace segcover
