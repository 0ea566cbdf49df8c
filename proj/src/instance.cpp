#include "segcover/instance.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "segcover/error.hpp"

namespace segcover {

Instance::Instance(std::size_t universe, std::vector<std::vector<ElementId>> subsets)
    : universe_(universe), members_(std::move(subsets)) {
  sets_.reserve(members_.size());
  SuccinctSet seen(universe_);
  for (std::size_t j = 0; j < members_.size(); ++j) {
    auto& m = members_[j];
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (m.empty()) throw UsageError("subset " + std::to_string(j) + " is empty");
    if (m.back() >= universe_) {
      throw UsageError("subset " + std::to_string(j) + " has element " +
                       std::to_string(m.back()) + " outside universe of size " +
                       std::to_string(universe_));
    }
    sets_.push_back(SuccinctSet::from_elements(universe_, m));
    seen |= sets_.back();
  }
  if (!seen.all()) {
    SuccinctSet missing = SuccinctSet::full(universe_) - seen;
    throw UsageError("element " + std::to_string(missing.first()) +
                     " is not covered by any subset");
  }
}

std::size_t Instance::max_subset_size() const noexcept {
  std::size_t best = 0;
  for (const auto& m : members_) best = std::max(best, m.size());
  return best;
}

std::size_t Instance::total_size() const noexcept {
  std::size_t total = 0;
  for (const auto& m : members_) total += m.size();
  return total;
}

Incidence build_incidence(const Instance& inst) {
  const std::size_t n = inst.universe_size();
  Incidence inc;
  inc.offsets.assign(n + 1, 0);
  for (SubsetId j = 0; j < inst.subset_count(); ++j) {
    for (const ElementId e : inst.members(j)) ++inc.offsets[e + 1];
  }
  std::partial_sum(inc.offsets.begin(), inc.offsets.end(), inc.offsets.begin());
  inc.subsets.resize(inc.offsets.back());
  std::vector<std::uint32_t> fill(inc.offsets.begin(), inc.offsets.end() - 1);
  for (SubsetId j = 0; j < inst.subset_count(); ++j) {
    for (const ElementId e : inst.members(j)) inc.subsets[fill[e]++] = j;
  }
  return inc;
}

Cover Cover::from_ids(const Instance& inst, std::span<const SubsetId> ids) {
  Cover c(inst.universe_size());
  std::vector<bool> seen(inst.subset_count(), false);
  for (const SubsetId id : ids) {
    if (id >= inst.subset_count()) {
      throw UsageError("unknown subset id " + std::to_string(id));
    }
    if (seen[id]) throw UsageError("duplicate subset id " + std::to_string(id));
    seen[id] = true;
    c.add(inst, id);
  }
  return c;
}

void Cover::add(const Instance& inst, SubsetId id) {
  assert(!contains(id));
  chosen_.push_back(id);
  covered_ |= inst.subset(id);
}

bool Cover::contains(SubsetId id) const {
  return std::find(chosen_.begin(), chosen_.end(), id) != chosen_.end();
}

bool cover_is_feasible(const Cover& c, const Instance& inst) {
  SuccinctSet covered(inst.universe_size());
  for (const SubsetId id : c.chosen()) {
    if (id >= inst.subset_count()) {
      throw UsageError("unknown subset id " + std::to_string(id));
    }
    covered |= inst.subset(id);
  }
  return covered.all();
}

}  // namespace segcover
