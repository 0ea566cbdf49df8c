#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "segcover/instance.hpp"
#include "segcover/rng.hpp"

namespace segcover {

// Candidate scores as a function of c = |S ∩ U| >= 1. All are strictly
// decreasing in c, so the best candidate is always the one with the largest c.
enum class EvalFunction : std::uint8_t { inverse, inverse_sqrt, inverse_log, inverse_square };

inline constexpr std::array<EvalFunction, 4> kAllEvalFunctions = {
    EvalFunction::inverse, EvalFunction::inverse_sqrt, EvalFunction::inverse_log,
    EvalFunction::inverse_square};

// 1/c, 1/sqrt(c), 1/ln(c+1), 1/c^2.
double evaluate(EvalFunction f, std::size_t coverage);
std::string_view to_string(EvalFunction f);

// Floor on diversification weights 1 - f(c), which go to zero or below for
// small c (1/ln 2 > 1).
inline constexpr double kMinSelectionWeight = 1e-6;

enum class RemovalMode {
  fixed,    // exactly max(1, floor(max_rm * |C|)) subsets
  uniform,  // a uniform count in [1, max(1, floor(max_rm * |C|))]
};

struct GraspParams {
  std::size_t num_iter = 300;
  double max_rm = 0.5;
  std::uint64_t seed = 0;
  std::vector<EvalFunction> eval_set{kAllEvalFunctions.begin(), kAllEvalFunctions.end()};
  RemovalMode removal = RemovalMode::fixed;
  // Workers for building the RowMap; the iteration loop is sequential.
  int threads = 1;
};

// Element-to-subset incidence ordered by element degree, plus the live set of
// still-uncovered ("pending") elements. Degrees are fixed at construction.
class RowMap {
 public:
  RowMap() = default;
  RowMap(Incidence incidence, std::vector<ElementId> order);

  std::size_t universe_size() const noexcept { return order_.size(); }
  std::uint32_t degree(ElementId e) const { return incidence_.degree(e); }
  std::span<const SubsetId> coverers(ElementId e) const { return incidence_.coverers(e); }
  // Every element, ascending by (degree, id).
  std::span<const ElementId> order() const noexcept { return order_; }

  std::size_t pending_count() const noexcept { return pending_count_; }
  bool is_pending(ElementId e) const { return pending_[e] != 0; }
  // Pending elements in RowMap order.
  std::vector<ElementId> pending() const;
  // Lowest-degree pending element (ties: lowest id).
  std::optional<ElementId> front();

  void reset_pending(const SuccinctSet& uncovered);
  // updateRowMap(S): drop the elements of a chosen subset.
  void mark_covered(std::span<const ElementId> elements);

  bool operator==(const RowMap& other) const {
    return incidence_.offsets == other.incidence_.offsets &&
           incidence_.subsets == other.incidence_.subsets && order_ == other.order_;
  }

 private:
  Incidence incidence_;
  std::vector<ElementId> order_;
  std::vector<std::uint8_t> pending_;
  std::size_t pending_count_ = 0;
  std::size_t head_ = 0;
};

// createMap + Sort. All elements start pending.
RowMap create_row_map_serial(const Instance& inst);
RowMap create_row_map(const Instance& inst, int threads);

// Picks among candidates by c_i = |S_i ∩ uncovered|. improve: argmin f(c_i),
// ties to the earlier candidate. Otherwise a draw weighted by
// max(kMinSelectionWeight, 1 - f(c_i)), uniform when every weight is the floor.
SubsetId find_best_candidate(const Instance& inst, std::span<const SubsetId> candidates,
                             EvalFunction f, const SuccinctSet& uncovered, bool improve,
                             Rng& rng);

// Randomized greedy completion of `partial`. Each step takes the covering list
// of the front RowMap element as candidates, draws f uniformly from eval_set
// and picks with find_best_candidate. The RowMap's pending set is reset to
// `uncovered` on entry.
Cover rand_construct(const Instance& inst, Cover partial, SuccinctSet uncovered,
                     RowMap& rowmap, bool improve, Rng& rng,
                     std::span<const EvalFunction> eval_set = kAllEvalFunctions);

// Drops max(1, floor(max_rm * |C|)) distinct subsets chosen uniformly (see
// RemovalMode); the rest keep their order.
Cover remove_sets(const Instance& inst, const Cover& cover, double max_rm, Rng& rng,
                  RemovalMode mode = RemovalMode::fixed);

// Scans subsets by descending size (ties: higher id first) and drops each one
// whose removal keeps the cover feasible. The result is 1-minimal.
Cover remove_redundant_sets(const Instance& inst, const Cover& cover);

struct GraspIteration {
  std::size_t iteration = 0;
  std::size_t candidate_size = 0;  // |newC| after pruning
  std::size_t best_size = 0;       // incumbent after the acceptance test
  bool accepted = false;
  bool improve = false;  // flag value handed to the next construction
};
using GraspTrace = std::function<void(const GraspIteration&)>;

// The improvement loop: destroy, rebuild, prune, accept iff strictly smaller.
// `start` must be feasible.
Cover grasp_improve(const Instance& inst, Cover start, const GraspParams& params,
                    RowMap& rowmap, Rng& rng, const GraspTrace& trace = {});

// Full sequential GRASP: RowMap, diversifying initial construction, pruning,
// then params.num_iter improvement iterations. Randomness comes from stream 0
// of params.seed.
Cover grasp_solve(const Instance& inst, const GraspParams& params,
                  const GraspTrace& trace = {});

void validate(const GraspParams& params);

}  // namespace segcover
