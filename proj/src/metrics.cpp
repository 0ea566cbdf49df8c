#include "segcover/metrics.hpp"

#include "segcover/error.hpp"

namespace segcover {

double rpd(std::size_t cardinality, std::size_t bks) {
  if (bks == 0) throw UsageError("rpd: best known solution must be >= 1");
  return (static_cast<double>(cardinality) - static_cast<double>(bks)) /
         static_cast<double>(bks);
}

double rpd_star(std::size_t cardinality, std::size_t greedy_cardinality) {
  if (greedy_cardinality == 0) throw UsageError("rpd_star: greedy cardinality must be >= 1");
  return (static_cast<double>(greedy_cardinality) - static_cast<double>(cardinality)) /
         static_cast<double>(greedy_cardinality);
}

}  // namespace segcover
