#include "segcover/greedy.hpp"

#include <vector>

namespace segcover {

Cover greedy_solve(const Instance& inst) {
  const std::size_t m = inst.subset_count();
  const Incidence inc = build_incidence(inst);
  std::vector<std::size_t> gain(m);
  for (SubsetId j = 0; j < m; ++j) gain[j] = inst.subset_size(j);
  std::vector<bool> covered(inst.universe_size(), false);
  std::size_t uncovered = inst.universe_size();

  Cover cover(inst.universe_size());
  while (uncovered > 0) {
    SubsetId best = 0;
    for (SubsetId j = 1; j < m; ++j) {
      if (gain[j] > gain[best]) best = j;
    }
    cover.add(inst, best);
    for (const ElementId e : inst.members(best)) {
      if (covered[e]) continue;
      covered[e] = true;
      --uncovered;
      for (const SubsetId t : inc.coverers(e)) --gain[t];
    }
  }
  return cover;
}

Cover greedy_solve_reference(const Instance& inst) {
  SuccinctSet uncovered = SuccinctSet::full(inst.universe_size());
  Cover cover(inst.universe_size());
  while (!uncovered.empty()) {
    SubsetId best = 0;
    std::size_t best_gain = 0;
    for (SubsetId j = 0; j < inst.subset_count(); ++j) {
      const std::size_t g = inst.subset(j).intersection_count(uncovered);
      if (g > best_gain) {
        best = j;
        best_gain = g;
      }
    }
    cover.add(inst, best);
    uncovered -= inst.subset(best);
  }
  return cover;
}

}  // namespace segcover
