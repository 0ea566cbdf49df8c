#include "segcover/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "segcover/error.hpp"
#include "segcover/greedy.hpp"
#include "segcover/grasp_su.hpp"
#include "segcover/metrics.hpp"
#include "segcover/rng.hpp"

namespace segcover {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
  if (name == "greedy") return Algorithm::greedy;
  if (name == "grasp") return Algorithm::grasp;
  if (name == "par-grasp") return Algorithm::par_grasp;
  if (name == "grasp-uf") return Algorithm::grasp_uf;
  if (name == "grasp-mst") return Algorithm::grasp_mst;
  throw UsageError("unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::greedy:
      return "greedy";
    case Algorithm::grasp:
      return "grasp";
    case Algorithm::par_grasp:
      return "par-grasp";
    case Algorithm::grasp_uf:
      return "grasp-uf";
    case Algorithm::grasp_mst:
      return "grasp-mst";
  }
  return "?";
}

std::uint64_t restart_seed(std::uint64_t master, std::size_t restart) {
  if (restart == 0) return master;
  return Rng::stream(master, 0x5EED0000ULL + restart)();
}

SolveOutcome solve_instance(const Instance& inst, const std::string& name,
                            const SolveOptions& options,
                            std::optional<std::size_t> greedy_cardinality) {
  if (options.threads < 1) throw UsageError("threads must be >= 1");
  if (options.restarts < 1) throw UsageError("restarts must be >= 1");
  validate(options.grasp);

  const auto wall0 = Clock::now();
  RunRecord rec;
  rec.instance = name;
  rec.algorithm = std::string(to_string(options.algorithm));
  rec.seed = options.grasp.seed;
  rec.threads = options.threads;
  rec.bks = options.bks;

  const bool parallel_prep = options.algorithm == Algorithm::par_grasp ||
                             options.algorithm == Algorithm::grasp_uf ||
                             options.algorithm == Algorithm::grasp_mst;
  std::optional<ReductionReport> reduction;
  auto t0 = Clock::now();
  if (options.preprocess) {
    reduction = reduce(inst, {.mode = options.reduce_mode,
                              .threads = parallel_prep ? options.threads : 1});
  }
  rec.preprocess_ms = ms_since(t0);
  const Instance& work = reduction ? reduction->residual : inst;
  const std::size_t forced = reduction ? reduction->forced.size() : 0;

  std::optional<Cover> best;
  for (std::size_t r = 0; r < options.restarts; ++r) {
    GraspParams params = options.grasp;
    params.seed = restart_seed(options.grasp.seed, r);
    Cover found;
    if (work.universe_size() == 0) {
      found = Cover(0);
    } else {
      switch (options.algorithm) {
        case Algorithm::greedy: {
          t0 = Clock::now();
          found = greedy_solve(work);
          rec.solve_ms += ms_since(t0);
          break;
        }
        case Algorithm::grasp:
        case Algorithm::par_grasp: {
          params.threads = options.algorithm == Algorithm::par_grasp ? options.threads : 1;
          t0 = Clock::now();
          found = grasp_solve(work, params, options.trace);
          rec.solve_ms += ms_since(t0);
          break;
        }
        case Algorithm::grasp_uf:
        case Algorithm::grasp_mst: {
          SuParams su{.grasp = params,
                      .threads = options.threads,
                      .source = options.algorithm == Algorithm::grasp_uf
                                    ? SegmentationSource::union_find
                                    : SegmentationSource::mst_bipartition,
                      .scale_iterations = options.scale_iterations};
          if (options.algorithm == Algorithm::grasp_mst && find_groups(work).components.size() > 1) {
            throw UsageError("instance '" + name +
                             "' is segmentable; grasp-mst needs a connected instance, use grasp-uf");
          }
          SuRun run = grasp_su_run(work, su);
          rec.segment_ms += run.times.segment_ms;
          rec.solve_ms += run.times.solve_ms;
          rec.merge_ms += run.times.merge_ms;
          found = std::move(run.cover);
          break;
        }
      }
    }
    if (!best || found.size() < best->size()) best = std::move(found);
    if (options.algorithm == Algorithm::greedy) break;  // deterministic
  }

  SolveOutcome outcome;
  outcome.cover = reduction ? reduction->lift(inst, *best) : *best;
  if (!cover_is_feasible(outcome.cover, inst)) {
    throw ContractError("solver returned an infeasible cover for '" + name + "'");
  }
  rec.cardinality = outcome.cover.size();
  if (rec.bks) rec.rpd = rpd(*rec.cardinality, *rec.bks);

  if (!greedy_cardinality) {
    greedy_cardinality =
        forced + (work.universe_size() == 0 ? 0 : greedy_solve(work).size());
  }
  if (*greedy_cardinality > 0) rec.rpd_star = rpd_star(*rec.cardinality, *greedy_cardinality);
  rec.wall_ms = ms_since(wall0);
  outcome.record = std::move(rec);
  return outcome;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw UsageError("cannot open manifest '" + manifest.string() + "'");
  std::vector<ManifestEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string path;
    if (!(fields >> path)) continue;
    ManifestEntry entry;
    entry.path = std::filesystem::path(path);
    if (entry.path.is_relative()) entry.path = manifest.parent_path() / entry.path;
    entry.name = entry.path.stem().string();
    std::size_t bks = 0;
    if (fields >> bks) entry.bks = bks;
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<RunRecord> run_bench(const std::vector<ManifestEntry>& entries,
                                 const std::vector<Algorithm>& algorithms,
                                 const std::vector<int>& thread_counts,
                                 const SolveOptions& base, FileFormat format, std::ostream& log) {
  std::vector<RunRecord> records;
  for (const ManifestEntry& entry : entries) {
    std::optional<Instance> inst;
    std::string error;
    try {
      inst = read_instance_file(entry.path, format);
    } catch (const std::exception& e) {
      error = e.what();
      log << "warning: " << entry.name << ": " << error << '\n';
    }

    std::optional<std::size_t> greedy_card;
    if (inst) {
      SolveOptions g = base;
      g.algorithm = Algorithm::greedy;
      g.bks = entry.bks;
      greedy_card = solve_instance(*inst, entry.name, g).record.cardinality;
    }

    for (const Algorithm a : algorithms) {
      for (const int t : thread_counts) {
        RunRecord rec;
        if (inst) {
          SolveOptions opt = base;
          opt.algorithm = a;
          opt.threads = t;
          opt.bks = entry.bks;
          try {
            rec = solve_instance(*inst, entry.name, opt, greedy_card).record;
          } catch (const std::exception& e) {
            rec.error = e.what();
            log << "warning: " << entry.name << " / " << to_string(a) << ": " << rec.error
                << '\n';
          }
        } else {
          rec.error = error;
        }
        rec.instance = entry.name;
        rec.algorithm = std::string(to_string(a));
        rec.seed = base.grasp.seed;
        rec.threads = t;
        rec.bks = entry.bks;
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

}  // namespace segcover
