#include "segcover/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "segcover/bench.hpp"
#include "segcover/error.hpp"
#include "segcover/instance_io.hpp"
#include "segcover/mst_partition.hpp"
#include "segcover/preprocess.hpp"
#include "segcover/report.hpp"
#include "segcover/segmentation.hpp"

namespace segcover {
namespace {

struct CommonInput {
  std::string input;
  std::string format = "auto";
};

void add_input_options(CLI::App& cmd, CommonInput& in) {
  cmd.add_option("--input", in.input, "Instance file")->required();
  cmd.add_option("--format", in.format, "Instance format")
      ->check(CLI::IsMember({"auto", "scp", "rail", "rail-count-first"}));
}

Instance load(const CommonInput& in) {
  return read_instance_file(in.input, parse_format_name(in.format));
}

std::string render(const std::vector<RunRecord>& records, const std::string& output) {
  return output == "json" ? emit_results_json(records) + "\n" : emit_results_csv(records);
}

RemovalMode parse_removal(const std::string& name) {
  if (name == "fixed") return RemovalMode::fixed;
  if (name == "uniform") return RemovalMode::uniform;
  throw UsageError("unknown removal mode '" + name + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Segmented GRASP solver for unicost set cover"};
  app.name(args.empty() ? "segcover" : args.front());
  app.require_subcommand(1);

  // solve
  CommonInput solve_in;
  std::string algorithm = "grasp";
  std::size_t iterations = 300;
  double max_rm = 0.5;
  int threads = 1;
  std::uint64_t seed = 0;
  std::size_t restarts = 1;
  std::optional<std::size_t> bks;
  std::string output = "csv";
  bool no_preprocess = false;
  bool one_pass = false;
  bool trace = false;
  bool scale_iterations = false;
  std::string removal = "fixed";
  std::string cover_path;

  auto* solve = app.add_subcommand("solve", "Solve one instance");
  add_input_options(*solve, solve_in);
  solve->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"greedy", "grasp", "par-grasp", "grasp-uf", "grasp-mst"}));
  solve->add_option("--iterations", iterations);
  solve->add_option("--max-rm", max_rm);
  solve->add_option("--threads", threads)->envname("SEGCOVER_THREADS")->check(CLI::PositiveNumber);
  solve->add_option("--seed", seed);
  solve->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
  solve->add_option("--bks", bks);
  solve->add_option("--output", output)->check(CLI::IsMember({"csv", "json"}));
  solve->add_flag("--no-preprocess", no_preprocess);
  solve->add_flag("--one-pass-reduce", one_pass);
  solve->add_flag("--trace", trace, "Per-iteration trace on stderr");
  solve->add_flag("--scale-iterations", scale_iterations,
                  "Split iterations across components by subset share");
  solve->add_option("--removal", removal)->check(CLI::IsMember({"fixed", "uniform"}));
  solve->add_option("--cover", cover_path, "Write chosen 1-based subset ids here");

  // generate
  GeneratorConfig gen;
  std::string gen_out;
  std::string gen_format = "scp";
  auto* generate = app.add_subcommand("generate", "Write a synthetic segmentable instance");
  generate->add_option("--n", gen.n)->required();
  generate->add_option("--m", gen.m)->required();
  generate->add_option("--groups", gen.groups);
  generate->add_option("--density", gen.density);
  generate->add_option("--seed", gen.seed);
  generate->add_option("--out", gen_out, "Output path (stdout if omitted)");
  generate->add_option("--format", gen_format)->check(CLI::IsMember({"scp", "rail"}));

  // bench
  std::string manifest;
  std::vector<std::string> bench_algorithms{"greedy", "grasp", "grasp-uf"};
  std::vector<int> bench_threads{1};
  std::string bench_format = "auto";
  auto* bench = app.add_subcommand("bench", "Sweep algorithms x instances x thread counts");
  bench->add_option("--manifest", manifest)->required();
  bench->add_option("--algorithms", bench_algorithms)->delimiter(',');
  bench->add_option("--threads", bench_threads)->delimiter(',')->envname("SEGCOVER_THREADS");
  bench->add_option("--format", bench_format)
      ->check(CLI::IsMember({"auto", "scp", "rail", "rail-count-first"}));
  bench->add_option("--iterations", iterations);
  bench->add_option("--max-rm", max_rm);
  bench->add_option("--seed", seed);
  bench->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
  bench->add_option("--output", output)->check(CLI::IsMember({"csv", "json"}));
  bench->add_flag("--no-preprocess", no_preprocess);
  bench->add_flag("--one-pass-reduce", one_pass);
  bench->add_flag("--scale-iterations", scale_iterations);

  // reduce
  CommonInput reduce_in;
  auto* reduce_cmd = app.add_subcommand("reduce", "Print the preprocessing table row");
  add_input_options(*reduce_cmd, reduce_in);
  reduce_cmd->add_flag("--one-pass-reduce", one_pass);
  reduce_cmd->add_option("--threads", threads)->envname("SEGCOVER_THREADS");

  // segment
  CommonInput segment_in;
  auto* segment = app.add_subcommand("segment", "Dump universe components as CSV");
  add_input_options(*segment, segment_in);
  segment->add_flag("--no-preprocess", no_preprocess);
  segment->add_flag("--one-pass-reduce", one_pass);

  // mst
  CommonInput mst_in;
  bool mst_residual = false;
  auto* mst = app.add_subcommand("mst", "Maximum-spanning-tree bipartition diagnostics");
  add_input_options(*mst, mst_in);
  mst->add_flag("--residual", mst_residual,
                "Restrict vertices to elements left uncovered by one-pass reduction");
  mst->add_option("--threads", threads)->envname("SEGCOVER_THREADS");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("segcover");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  }

  const ReduceMode reduce_mode = one_pass ? ReduceMode::one_pass : ReduceMode::fixpoint;
  try {
    if (*solve) {
      const Instance inst = load(solve_in);
      SolveOptions opt;
      opt.algorithm = parse_algorithm(algorithm);
      opt.grasp.num_iter = iterations;
      opt.grasp.max_rm = max_rm;
      opt.grasp.seed = seed;
      opt.grasp.removal = parse_removal(removal);
      opt.threads = threads;
      opt.restarts = restarts;
      opt.preprocess = !no_preprocess;
      opt.reduce_mode = reduce_mode;
      opt.scale_iterations = scale_iterations;
      opt.bks = bks;
      if (trace) {
        opt.trace = [&err](const GraspIteration& it) {
          err << "iter " << it.iteration << " candidate " << it.candidate_size << " best "
              << it.best_size << (it.accepted ? " accepted" : "") << '\n';
        };
      }
      const std::string name = std::filesystem::path(solve_in.input).stem().string();
      SolveOutcome result = solve_instance(inst, name, opt);
      if (!cover_path.empty()) {
        std::ofstream co(cover_path);
        if (!co) throw UsageError("cannot write '" + cover_path + "'");
        for (const SubsetId id : result.cover.chosen()) co << id + 1 << '\n';
      }
      out << render({result.record}, output);
      return kExitOk;
    }
    if (*generate) {
      const Instance inst = generate_segmentable(gen);
      const std::string text = gen_format == "rail" ? write_rail(inst) : write_scp(inst);
      if (gen_out.empty()) {
        out << text;
      } else {
        std::ofstream f(gen_out, std::ios::binary);
        if (!f) throw UsageError("cannot write '" + gen_out + "'");
        f << text;
      }
      return kExitOk;
    }
    if (*bench) {
      const auto entries = read_manifest(manifest);
      std::vector<Algorithm> algs;
      for (const auto& a : bench_algorithms) algs.push_back(parse_algorithm(a));
      for (const int t : bench_threads) {
        if (t < 1) throw UsageError("thread counts must be >= 1");
      }
      SolveOptions base;
      base.grasp.num_iter = iterations;
      base.grasp.max_rm = max_rm;
      base.grasp.seed = seed;
      base.restarts = restarts;
      base.preprocess = !no_preprocess;
      base.reduce_mode = reduce_mode;
      base.scale_iterations = scale_iterations;
      const auto records =
          run_bench(entries, algs, bench_threads, base, parse_format_name(bench_format), err);
      out << render(records, output);
      return kExitOk;
    }
    if (*reduce_cmd) {
      const Instance inst = load(reduce_in);
      const auto report = reduce(inst, {.mode = reduce_mode, .threads = threads});
      out << reduction_table_header() << '\n'
          << reduction_table_row(std::filesystem::path(reduce_in.input).stem().string(), report)
          << '\n';
      return kExitOk;
    }
    if (*segment) {
      const Instance inst = load(segment_in);
      if (no_preprocess) {
        out << segmentation_csv(find_groups(inst));
      } else {
        out << segmentation_csv(find_groups(reduce(inst, {.mode = reduce_mode}).residual));
      }
      return kExitOk;
    }
    if (*mst) {
      const Instance inst = load(mst_in);
      SuccinctSet vertices = SuccinctSet::full(inst.universe_size());
      if (mst_residual) vertices -= reduce(inst, {.mode = ReduceMode::one_pass}).covered;
      out << mst_diagnostics(mst_bipartition(build_cograph(inst, vertices, threads)));
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitUsageError;
}

}  // namespace segcover
