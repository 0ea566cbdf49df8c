#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "segcover/instance.hpp"

namespace segcover {

// OR-Library text formats. Files use 1-based ids; instances are 0-based.
//   scp:  "rows cols", cols costs, then per row: count, covering column ids
//   rail: "rows cols", then per column: cost, count, covered row ids
//   rail_count_first: as rail with count and cost swapped
// Costs are read and discarded (unicost).
enum class FileFormat { automatic, scp, rail, rail_count_first };

FileFormat parse_format_name(std::string_view name);

Instance parse_scp(std::string_view text);
Instance parse_rail(std::string_view text, bool count_first = false);
// automatic: try rail (cost-first) and fall back to scp.
Instance parse_instance(std::string_view text, FileFormat format = FileFormat::automatic);
Instance read_instance_file(const std::filesystem::path& path,
                            FileFormat format = FileFormat::automatic);

std::string write_scp(const Instance& inst);
std::string write_rail(const Instance& inst);

struct GeneratorConfig {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t groups = 1;
  // Mean fraction of its block that a subset covers.
  double density = 0.05;
  std::uint64_t seed = 0;
};

// Synthetic instance whose co-occurrence graph has exactly cfg.groups
// connected components. Elements are split into near-equal contiguous blocks,
// subset j draws its elements from block j % groups, and a repair pass makes
// every block covered and connected. Deterministic in cfg.
Instance generate_segmentable(const GeneratorConfig& cfg);

}  // namespace segcover
