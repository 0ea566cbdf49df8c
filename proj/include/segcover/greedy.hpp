#pragma once

#include "segcover/instance.hpp"

namespace segcover {

// Classical greedy: repeatedly take the subset covering the most uncovered
// elements, ties to the lowest id. Gains are maintained incrementally.
Cover greedy_solve(const Instance& inst);

// Same picks, recomputing every gain as a word-parallel |S ∩ U| at each step.
// Kept as the reference for greedy_solve.
Cover greedy_solve_reference(const Instance& inst);

}  // namespace segcover
