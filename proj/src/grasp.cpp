#include "segcover/grasp.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "segcover/error.hpp"

namespace segcover {
namespace {

bool degree_order(const Incidence& inc, ElementId a, ElementId b) {
  const auto da = inc.degree(a);
  const auto db = inc.degree(b);
  return da != db ? da < db : a < b;
}

// Chunked sort followed by pairwise merge rounds.
template <typename T, typename Less>
void parallel_sort(std::vector<T>& v, Less less, int threads) {
  const std::size_t chunks = static_cast<std::size_t>(std::max(1, threads));
  if (chunks == 1 || v.size() < 4096) {
    std::sort(v.begin(), v.end(), less);
    return;
  }
  std::vector<std::size_t> bounds(chunks + 1);
  for (std::size_t c = 0; c <= chunks; ++c) bounds[c] = v.size() * c / chunks;
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
    std::sort(v.begin() + bounds[c], v.begin() + bounds[c + 1], less);
  }
  for (std::size_t width = 1; width < chunks; width *= 2) {
#pragma omp parallel for num_threads(threads) schedule(static)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks);
         c += static_cast<std::ptrdiff_t>(2 * width)) {
      const std::size_t mid = std::min(chunks, static_cast<std::size_t>(c) + width);
      const std::size_t hi = std::min(chunks, static_cast<std::size_t>(c) + 2 * width);
      std::inplace_merge(v.begin() + bounds[c], v.begin() + bounds[mid],
                         v.begin() + bounds[hi], less);
    }
  }
}

}  // namespace

double evaluate(EvalFunction f, std::size_t coverage) {
  const auto c = static_cast<double>(coverage);
  switch (f) {
    case EvalFunction::inverse:
      return 1.0 / c;
    case EvalFunction::inverse_sqrt:
      return 1.0 / std::sqrt(c);
    case EvalFunction::inverse_log:
      return 1.0 / std::log(c + 1.0);
    case EvalFunction::inverse_square:
      return 1.0 / (c * c);
  }
  return 1.0 / c;
}

std::string_view to_string(EvalFunction f) {
  switch (f) {
    case EvalFunction::inverse:
      return "1/c";
    case EvalFunction::inverse_sqrt:
      return "1/sqrt(c)";
    case EvalFunction::inverse_log:
      return "1/log(c+1)";
    case EvalFunction::inverse_square:
      return "1/c^2";
  }
  return "?";
}

RowMap::RowMap(Incidence incidence, std::vector<ElementId> order)
    : incidence_(std::move(incidence)),
      order_(std::move(order)),
      pending_(order_.size(), 1),
      pending_count_(order_.size()) {}

std::vector<ElementId> RowMap::pending() const {
  std::vector<ElementId> out;
  out.reserve(pending_count_);
  for (const ElementId e : order_) {
    if (pending_[e]) out.push_back(e);
  }
  return out;
}

std::optional<ElementId> RowMap::front() {
  while (head_ < order_.size() && !pending_[order_[head_]]) ++head_;
  if (head_ == order_.size()) return std::nullopt;
  return order_[head_];
}

void RowMap::reset_pending(const SuccinctSet& uncovered) {
  if (uncovered.capacity() != order_.size()) {
    throw UsageError("uncovered set does not match the RowMap universe");
  }
  pending_count_ = 0;
  for (ElementId e = 0; e < order_.size(); ++e) {
    pending_[e] = uncovered.test(e) ? 1 : 0;
    pending_count_ += pending_[e];
  }
  head_ = 0;
}

void RowMap::mark_covered(std::span<const ElementId> elements) {
  for (const ElementId e : elements) {
    if (pending_[e]) {
      pending_[e] = 0;
      --pending_count_;
    }
  }
}

RowMap create_row_map_serial(const Instance& inst) {
  Incidence inc = build_incidence(inst);
  std::vector<ElementId> order(inst.universe_size());
  std::iota(order.begin(), order.end(), ElementId{0});
  std::sort(order.begin(), order.end(),
            [&](ElementId a, ElementId b) { return degree_order(inc, a, b); });
  return RowMap(std::move(inc), std::move(order));
}

RowMap create_row_map(const Instance& inst, int threads) {
  threads = std::max(1, threads);
  if (threads == 1) return create_row_map_serial(inst);
  const std::size_t n = inst.universe_size();
  const auto m = static_cast<std::ptrdiff_t>(inst.subset_count());

  Incidence inc;
  inc.offsets.assign(n + 1, 0);
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::ptrdiff_t j = 0; j < m; ++j) {
    for (const ElementId e : inst.members(static_cast<SubsetId>(j))) {
#pragma omp atomic
      ++inc.offsets[e + 1];
    }
  }
  std::partial_sum(inc.offsets.begin(), inc.offsets.end(), inc.offsets.begin());
  inc.subsets.resize(inc.offsets.back());
  std::vector<std::uint32_t> fill(inc.offsets.begin(), inc.offsets.end() - 1);
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::ptrdiff_t j = 0; j < m; ++j) {
    for (const ElementId e : inst.members(static_cast<SubsetId>(j))) {
      std::uint32_t slot;
#pragma omp atomic capture
      slot = fill[e]++;
      inc.subsets[slot] = static_cast<SubsetId>(j);
    }
  }
  // Atomic slots arrive in scheduling order; restore ascending lists.
#pragma omp parallel for num_threads(threads) schedule(dynamic, 256)
  for (std::ptrdiff_t e = 0; e < static_cast<std::ptrdiff_t>(n); ++e) {
    std::sort(inc.subsets.begin() + inc.offsets[e], inc.subsets.begin() + inc.offsets[e + 1]);
  }

  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), ElementId{0});
  parallel_sort(
      order, [&](ElementId a, ElementId b) { return degree_order(inc, a, b); }, threads);
  return RowMap(std::move(inc), std::move(order));
}

SubsetId find_best_candidate(const Instance& inst, std::span<const SubsetId> candidates,
                             EvalFunction f, const SuccinctSet& uncovered, bool improve,
                             Rng& rng) {
  if (candidates.empty()) throw UsageError("find_best_candidate: no candidates");
  if (candidates.size() == 1) return candidates.front();

  std::vector<double> score(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::size_t c = inst.subset(candidates[i]).intersection_count(uncovered);
    if (c == 0) {
      throw UsageError("candidate " + std::to_string(candidates[i]) +
                       " covers no uncovered element");
    }
    score[i] = evaluate(f, c);
  }

  if (improve) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < score.size(); ++i) {
      if (score[i] < score[best]) best = i;
    }
    return candidates[best];
  }

  double total = 0.0;
  bool all_floor = true;
  for (auto& s : score) {
    const double w = 1.0 - s;
    if (w > kMinSelectionWeight) {
      s = w;
      all_floor = false;
    } else {
      s = kMinSelectionWeight;
    }
    total += s;
  }
  if (all_floor) return candidates[rng.uniform(candidates.size())];
  double r = rng.uniform01() * total;
  for (std::size_t i = 0; i < score.size(); ++i) {
    if (r < score[i]) return candidates[i];
    r -= score[i];
  }
  return candidates.back();
}

Cover rand_construct(const Instance& inst, Cover partial, SuccinctSet uncovered,
                     RowMap& rowmap, bool improve, Rng& rng,
                     std::span<const EvalFunction> eval_set) {
  if (eval_set.empty()) throw UsageError("rand_construct: empty evaluation function set");
  if (partial.covered().intersects(uncovered)) {
    throw UsageError("rand_construct: partial cover overlaps the uncovered set");
  }
  rowmap.reset_pending(uncovered);
  while (!uncovered.empty()) {
    const std::optional<ElementId> e = rowmap.front();
    if (!e) throw ContractError("RowMap has no pending element while some remain uncovered");
    const auto candidates = rowmap.coverers(*e);
    if (candidates.empty()) {
      throw ContractError("element " + std::to_string(*e) + " has no covering subset");
    }
    const EvalFunction f = eval_set[rng.uniform(eval_set.size())];
    const SubsetId s = find_best_candidate(inst, candidates, f, uncovered, improve, rng);
    partial.add(inst, s);
    uncovered -= inst.subset(s);
    rowmap.mark_covered(inst.members(s));
  }
  return partial;
}

Cover remove_sets(const Instance& inst, const Cover& cover, double max_rm, Rng& rng,
                  RemovalMode mode) {
  if (cover.empty()) throw UsageError("remove_sets: empty cover");
  if (!(max_rm > 0.0 && max_rm < 1.0)) throw UsageError("remove_sets: max_rm must be in (0, 1)");
  const std::size_t size = cover.size();
  std::size_t k = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::floor(max_rm * static_cast<double>(size))));
  if (mode == RemovalMode::uniform) k = 1 + rng.uniform(k);

  std::vector<std::size_t> pos(size);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pos[i], pos[i + rng.uniform(size - i)]);
  }
  std::vector<bool> drop(size, false);
  for (std::size_t i = 0; i < k; ++i) drop[pos[i]] = true;

  Cover out(inst.universe_size());
  for (std::size_t i = 0; i < size; ++i) {
    if (!drop[i]) out.add(inst, cover.chosen()[i]);
  }
  return out;
}

Cover remove_redundant_sets(const Instance& inst, const Cover& cover) {
  if (!cover_is_feasible(cover, inst)) {
    throw UsageError("remove_redundant_sets: cover is infeasible");
  }
  std::vector<std::uint32_t> multiplicity(inst.universe_size(), 0);
  for (const SubsetId id : cover.chosen()) {
    for (const ElementId e : inst.members(id)) ++multiplicity[e];
  }
  std::vector<SubsetId> scan(cover.chosen());
  std::sort(scan.begin(), scan.end(), [&](SubsetId a, SubsetId b) {
    const auto sa = inst.subset_size(a);
    const auto sb = inst.subset_size(b);
    return sa != sb ? sa > sb : a > b;
  });
  std::vector<bool> dropped(inst.subset_count(), false);
  for (const SubsetId id : scan) {
    const auto members = inst.members(id);
    const bool redundant = std::all_of(members.begin(), members.end(),
                                       [&](ElementId e) { return multiplicity[e] >= 2; });
    if (!redundant) continue;
    dropped[id] = true;
    for (const ElementId e : members) --multiplicity[e];
  }
  Cover out(inst.universe_size());
  for (const SubsetId id : cover.chosen()) {
    if (!dropped[id]) out.add(inst, id);
  }
  return out;
}

void validate(const GraspParams& params) {
  if (!(params.max_rm > 0.0 && params.max_rm < 1.0)) {
    throw UsageError("max_rm must lie in (0, 1)");
  }
  if (params.eval_set.empty()) throw UsageError("evaluation function set is empty");
  if (params.threads < 1) throw UsageError("threads must be >= 1");
}

Cover grasp_improve(const Instance& inst, Cover start, const GraspParams& params,
                    RowMap& rowmap, Rng& rng, const GraspTrace& trace) {
  validate(params);
  if (!cover_is_feasible(start, inst)) throw UsageError("grasp_improve: start cover is infeasible");
  Cover best = std::move(start);
  if (best.empty()) return best;

  const SuccinctSet universe = SuccinctSet::full(inst.universe_size());
  bool improve = true;
  for (std::size_t it = 1; it <= params.num_iter; ++it) {
    Cover partial = remove_sets(inst, best, params.max_rm, rng, params.removal);
    SuccinctSet uncovered = universe - partial.covered();
    Cover candidate = rand_construct(inst, std::move(partial), std::move(uncovered), rowmap,
                                     improve, rng, params.eval_set);
    candidate = remove_redundant_sets(inst, candidate);
    const bool accepted = candidate.size() < best.size();
    if (accepted) best = std::move(candidate);
    improve = accepted;
    if (trace) {
      trace({.iteration = it,
             .candidate_size = accepted ? best.size() : candidate.size(),
             .best_size = best.size(),
             .accepted = accepted,
             .improve = improve});
    }
  }
  return best;
}

Cover grasp_solve(const Instance& inst, const GraspParams& params, const GraspTrace& trace) {
  validate(params);
  if (inst.universe_size() == 0) return Cover(0);
  RowMap rowmap = create_row_map(inst, params.threads);
  Rng rng = Rng::stream(params.seed, 0);
  Cover initial = rand_construct(inst, Cover(inst.universe_size()),
                                 SuccinctSet::full(inst.universe_size()), rowmap, false, rng,
                                 params.eval_set);
  initial = remove_redundant_sets(inst, initial);
  return grasp_improve(inst, std::move(initial), params, rowmap, rng, trace);
}

}  // namespace segcover
