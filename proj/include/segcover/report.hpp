#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace segcover {

// One solver run as reported by the CLI. rpd is present iff bks is. A failed
// benchmark cell has no cardinality and a non-empty error.
struct RunRecord {
  std::string instance;
  std::string algorithm;
  std::uint64_t seed = 0;
  int threads = 1;
  std::optional<std::size_t> cardinality;
  std::optional<std::size_t> bks;
  std::optional<double> rpd;
  std::optional<double> rpd_star;
  double preprocess_ms = 0.0;
  double segment_ms = 0.0;
  double solve_ms = 0.0;
  double merge_ms = 0.0;
  double wall_ms = 0.0;
  std::string error;
};

inline constexpr const char* kResultsCsvHeader =
    "instance,algorithm,seed,threads,cardinality,bks,rpd,rpd_star,wall_ms";

// Header line plus one RFC 4180 row per record; reals with four decimals,
// missing values as empty cells.
std::string emit_results_csv(std::span<const RunRecord> records);
std::string csv_row(const RunRecord& record);

// JSON array of objects keyed by the RunRecord field names.
std::string emit_results_json(std::span<const RunRecord> records);

}  // namespace segcover
