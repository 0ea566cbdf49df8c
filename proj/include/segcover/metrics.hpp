#pragma once

#include <cstddef>

namespace segcover {

// (|C| - BKS) / BKS. Lower is better. Throws UsageError when bks == 0.
double rpd(std::size_t cardinality, std::size_t bks);

// (|C_greedy| - |C|) / |C_greedy|. Higher is better; negative when worse than
// greedy. Throws UsageError when greedy_cardinality == 0.
double rpd_star(std::size_t cardinality, std::size_t greedy_cardinality);

}  // namespace segcover
