#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "segcover/instance.hpp"

namespace segcover {

enum class ReduceMode {
  // Alternate forcing and residual-set dominance until nothing changes.
  fixpoint,
  // One round: force on the original degrees, then drop subsets dominated by
  // another subset of the original family.
  one_pass,
};

struct ReduceOptions {
  ReduceMode mode = ReduceMode::fixpoint;
  int threads = 1;
};

// Outcome of instance reduction. Identities:
//   n = covered.count() + residual.universe_size()
//   m = forced.size() + excluded.size() + residual.subset_count()
struct ReductionReport {
  std::size_t original_universe = 0;
  std::size_t original_subsets = 0;
  std::vector<SubsetId> forced;    // in forcing order
  std::vector<SubsetId> excluded;  // ascending
  SuccinctSet covered;             // elements covered by forced subsets
  Instance residual;
  std::vector<ElementId> residual_elements;  // residual element id -> original
  std::vector<SubsetId> residual_subsets;    // residual subset id -> original

  // forced ∪ (residual cover mapped back to original ids).
  Cover lift(const Instance& original, const Cover& residual_cover) const;
};

ReductionReport reduce(const Instance& inst, const ReduceOptions& options = {});

// Subsets among `alive` whose set is contained in another alive subset's set
// (equal sets: the higher id is the dominated one). Returned ascending.
// The serial version is the all-pairs reference; the parallel one prunes
// candidates through the rarest element of each subset.
std::vector<SubsetId> dominated_subsets_serial(std::span<const SuccinctSet> sets,
                                               std::span<const SubsetId> alive);
std::vector<SubsetId> dominated_subsets(std::span<const SuccinctSet> sets,
                                        std::span<const SubsetId> alive, int threads);

// Header and row in the layout of the OR-Library reduction tables:
// instance, |X|, X_cov, X_uncov, |F|, F_inc, F_exc, F_left.
std::string reduction_table_header();
std::string reduction_table_row(const std::string& name, const ReductionReport& report);

}  // namespace segcover
