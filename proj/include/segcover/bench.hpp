#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "segcover/grasp.hpp"
#include "segcover/instance.hpp"
#include "segcover/instance_io.hpp"
#include "segcover/preprocess.hpp"
#include "segcover/report.hpp"

namespace segcover {

enum class Algorithm { greedy, grasp, par_grasp, grasp_uf, grasp_mst };

Algorithm parse_algorithm(std::string_view name);
std::string_view to_string(Algorithm a);

struct SolveOptions {
  Algorithm algorithm = Algorithm::grasp;
  GraspParams grasp;  // grasp.seed is the master seed
  int threads = 1;
  std::size_t restarts = 1;
  bool preprocess = true;
  ReduceMode reduce_mode = ReduceMode::fixpoint;
  bool scale_iterations = false;
  std::optional<std::size_t> bks;
  GraspTrace trace;
};

struct SolveOutcome {
  Cover cover;  // over the original instance, feasibility re-checked
  RunRecord record;
};

// Seed of restart r: the master itself for r == 0, otherwise an independent
// SplitMix64-derived value.
std::uint64_t restart_seed(std::uint64_t master, std::size_t restart);

// Preprocess (unless disabled), run the algorithm for every restart, keep the
// smallest cover (earliest restart on ties), lift it to the original ids and
// re-validate it. rpd_star compares against greedy on the same reduced
// instance; pass greedy_cardinality to reuse a known baseline.
SolveOutcome solve_instance(const Instance& inst, const std::string& name,
                            const SolveOptions& options,
                            std::optional<std::size_t> greedy_cardinality = std::nullopt);

struct ManifestEntry {
  std::filesystem::path path;
  std::string name;
  std::optional<std::size_t> bks;
};

// Lines of "path [bks]"; '#' starts a comment. Relative paths resolve against
// the manifest's directory.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest);

// One record per (instance, algorithm, thread count) cell. An instance that
// fails to load yields failed records for all of its cells; the sweep goes on.
std::vector<RunRecord> run_bench(const std::vector<ManifestEntry>& entries,
                                 const std::vector<Algorithm>& algorithms,
                                 const std::vector<int>& thread_counts,
                                 const SolveOptions& base, FileFormat format, std::ostream& log);

}  // namespace segcover
