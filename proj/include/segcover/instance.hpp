#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "segcover/succinct_set.hpp"

namespace segcover {

// A unicost set-cover instance: universe {0..n-1} and a family of non-empty
// subsets with dense ids 0..m-1 whose union is the universe. Immutable after
// construction; safe to share across threads.
class Instance {
 public:
  Instance() = default;

  // Member lists are sorted and deduplicated. Throws UsageError on an
  // out-of-range element, an empty subset, or an uncovered element.
  Instance(std::size_t universe, std::vector<std::vector<ElementId>> subsets);

  std::size_t universe_size() const noexcept { return universe_; }
  std::size_t subset_count() const noexcept { return members_.size(); }

  const SuccinctSet& subset(SubsetId id) const { return sets_[id]; }
  std::span<const ElementId> members(SubsetId id) const { return members_[id]; }
  std::size_t subset_size(SubsetId id) const { return members_[id].size(); }
  std::size_t max_subset_size() const noexcept;
  // Σ|S| over the family.
  std::size_t total_size() const noexcept;

  bool operator==(const Instance& other) const {
    return universe_ == other.universe_ && members_ == other.members_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::vector<ElementId>> members_;
  std::vector<SuccinctSet> sets_;
};

// Element -> covering subsets, compressed rows. Covering lists are ascending.
struct Incidence {
  std::vector<std::uint32_t> offsets;  // size n + 1
  std::vector<SubsetId> subsets;

  std::span<const SubsetId> coverers(ElementId e) const {
    return {subsets.data() + offsets[e], subsets.data() + offsets[e + 1]};
  }
  std::uint32_t degree(ElementId e) const { return offsets[e + 1] - offsets[e]; }
};

Incidence build_incidence(const Instance& inst);

// Selected subset ids (in selection order) plus the union of their elements.
// Single-owner mutable state.
class Cover {
 public:
  Cover() = default;
  explicit Cover(std::size_t universe) : covered_(universe) {}

  // Builds a cover from ids, validating range and rejecting duplicates.
  static Cover from_ids(const Instance& inst, std::span<const SubsetId> ids);

  // Precondition: id is not already chosen.
  void add(const Instance& inst, SubsetId id);

  const std::vector<SubsetId>& chosen() const noexcept { return chosen_; }
  const SuccinctSet& covered() const noexcept { return covered_; }
  std::size_t size() const noexcept { return chosen_.size(); }
  bool empty() const noexcept { return chosen_.empty(); }
  bool contains(SubsetId id) const;

 private:
  std::vector<SubsetId> chosen_;
  SuccinctSet covered_;
};

// True iff the union of the chosen subsets (recomputed from the instance, not
// taken from c.covered()) is the whole universe. Throws UsageError on an
// unknown subset id.
bool cover_is_feasible(const Cover& c, const Instance& inst);

}  // namespace segcover
