#include "segcover/preprocess.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

#include "segcover/error.hpp"

namespace segcover {
namespace {

bool dominates(const SuccinctSet& big, SubsetId big_id, const SuccinctSet& small,
               SubsetId small_id, std::size_t big_count, std::size_t small_count) {
  if (big_count < small_count) return false;
  if (big_count == small_count && big_id > small_id) return false;
  return small.is_subset_of(big);
}

}  // namespace

std::vector<SubsetId> dominated_subsets_serial(std::span<const SuccinctSet> sets,
                                               std::span<const SubsetId> alive) {
  std::vector<SubsetId> out;
  for (const SubsetId s : alive) {
    const std::size_t cs = sets[s].count();
    for (const SubsetId t : alive) {
      if (t == s) continue;
      if (dominates(sets[t], t, sets[s], s, sets[t].count(), cs)) {
        out.push_back(s);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubsetId> dominated_subsets(std::span<const SuccinctSet> sets,
                                        std::span<const SubsetId> alive, int threads) {
  if (alive.empty()) return {};
  const std::size_t n = sets[alive.front()].capacity();
  const auto count = static_cast<std::ptrdiff_t>(alive.size());

  std::vector<std::size_t> card(alive.size());
  std::vector<std::vector<ElementId>> members(alive.size());
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    members[i] = sets[alive[i]].to_vector();
    card[i] = members[i].size();
  }

  // Element -> positions in `alive` of the subsets containing it.
  std::vector<std::uint32_t> offsets(n + 1, 0);
  for (const auto& m : members) {
    for (const ElementId e : m) ++offsets[e + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<std::uint32_t> holders(offsets.back());
  {
    std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (const ElementId e : members[i]) holders[fill[e]++] = static_cast<std::uint32_t>(i);
    }
  }

  std::vector<std::uint8_t> flagged(alive.size(), 0);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    if (members[i].empty()) continue;
    ElementId rare = members[i].front();
    for (const ElementId e : members[i]) {
      if (offsets[e + 1] - offsets[e] < offsets[rare + 1] - offsets[rare]) rare = e;
    }
    const SubsetId s = alive[i];
    for (std::uint32_t k = offsets[rare]; k < offsets[rare + 1]; ++k) {
      const std::uint32_t j = holders[k];
      if (j == static_cast<std::uint32_t>(i)) continue;
      if (dominates(sets[alive[j]], alive[j], sets[s], s, card[j], card[i])) {
        flagged[i] = 1;
        break;
      }
    }
  }

  std::vector<SubsetId> out;
  for (std::size_t i = 0; i < alive.size(); ++i) {
    if (flagged[i]) out.push_back(alive[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReductionReport reduce(const Instance& inst, const ReduceOptions& options) {
  const std::size_t n = inst.universe_size();
  const std::size_t m = inst.subset_count();
  const int threads = std::max(1, options.threads);

  ReductionReport report;
  report.original_universe = n;
  report.original_subsets = m;
  report.covered = SuccinctSet(n);

  enum class State : std::uint8_t { alive, forced, excluded };
  std::vector<State> state(m, State::alive);
  std::vector<SuccinctSet> restricted;
  restricted.reserve(m);
  for (SubsetId j = 0; j < m; ++j) restricted.push_back(inst.subset(j));
  std::vector<SuccinctSet> original_sets;
  if (options.mode == ReduceMode::one_pass) original_sets = restricted;

  auto alive_ids = [&] {
    std::vector<SubsetId> ids;
    for (SubsetId j = 0; j < m; ++j) {
      if (state[j] == State::alive) ids.push_back(j);
    }
    return ids;
  };

  bool changed = true;
  while (changed) {
    changed = false;

    // Force the unique coverer of each still-uncovered element.
    std::vector<std::uint32_t> degree(n, 0);
    std::vector<SubsetId> last(n, 0);
    for (SubsetId j = 0; j < m; ++j) {
      if (state[j] != State::alive) continue;
      restricted[j].for_each([&](ElementId e) {
        ++degree[e];
        last[e] = j;
      });
    }
    for (ElementId e = 0; e < n; ++e) {
      if (report.covered.test(e)) continue;
      if (degree[e] == 0) throw ContractError("element left without any coverer");
      if (degree[e] == 1 && state[last[e]] == State::alive) {
        state[last[e]] = State::forced;
        report.forced.push_back(last[e]);
        report.covered |= inst.subset(last[e]);
        changed = true;
      }
    }

    for (SubsetId j = 0; j < m; ++j) {
      if (state[j] != State::alive) continue;
      restricted[j] -= report.covered;
      if (restricted[j].empty()) {
        state[j] = State::excluded;
        report.excluded.push_back(j);
        changed = true;
      }
    }

    const std::vector<SuccinctSet>& dominance_sets =
        options.mode == ReduceMode::one_pass ? original_sets : restricted;
    const std::vector<SubsetId> dominated =
        dominated_subsets(dominance_sets, alive_ids(), threads);
    for (const SubsetId j : dominated) {
      state[j] = State::excluded;
      report.excluded.push_back(j);
      changed = true;
    }

    if (options.mode == ReduceMode::one_pass) break;
  }
  std::sort(report.excluded.begin(), report.excluded.end());

  std::vector<ElementId> remap(n, 0);
  for (ElementId e = 0; e < n; ++e) {
    if (!report.covered.test(e)) {
      remap[e] = static_cast<ElementId>(report.residual_elements.size());
      report.residual_elements.push_back(e);
    }
  }
  std::vector<std::vector<ElementId>> subsets;
  for (SubsetId j = 0; j < m; ++j) {
    if (state[j] != State::alive) continue;
    std::vector<ElementId> members;
    restricted[j].for_each([&](ElementId e) { members.push_back(remap[e]); });
    subsets.push_back(std::move(members));
    report.residual_subsets.push_back(j);
  }
  report.residual = Instance(report.residual_elements.size(), std::move(subsets));
  return report;
}

Cover ReductionReport::lift(const Instance& original, const Cover& residual_cover) const {
  std::vector<SubsetId> ids(forced);
  for (const SubsetId r : residual_cover.chosen()) {
    if (r >= residual_subsets.size()) {
      throw UsageError("residual subset id " + std::to_string(r) + " out of range");
    }
    ids.push_back(residual_subsets[r]);
  }
  return Cover::from_ids(original, ids);
}

std::string reduction_table_header() {
  return "instance,|X|,X_cov,X_uncov,|F|,F_inc,F_exc,F_left";
}

std::string reduction_table_row(const std::string& name, const ReductionReport& r) {
  return name + ',' + std::to_string(r.original_universe) + ',' +
         std::to_string(r.covered.count()) + ',' + std::to_string(r.residual.universe_size()) +
         ',' + std::to_string(r.original_subsets) + ',' + std::to_string(r.forced.size()) +
         ',' + std::to_string(r.excluded.size()) + ',' +
         std::to_string(r.residual.subset_count());
}

}  // namespace segcover
