#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "fastsil/bench.hpp"
#include "fastsil/blobs.hpp"
#include "fastsil/csv.hpp"
#include "fastsil/engine.hpp"
#include "fastsil/report_io.hpp"

namespace {

using namespace fastsil;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitTolerance = 3;

Metric metric_from_flag(const std::string& flag) {
  const auto metric = parse_metric(flag);
  if (!metric) throw ValidationError("unknown metric '" + flag + "' (use sqeuclid or cosine)");
  if (*metric == Metric::Euclidean) {
    throw ValidationError("plain euclidean distance is available only through the naive oracle "
                          "library API, not the CLI");
  }
  return *metric;
}

struct ScoreArgs {
  std::string input;
  std::string metric = "sqeuclid";
  std::string engine = "fast";
  int shards = 0;  // 0 = hardware default
  std::string output;
  std::string format = "jsonl";
};

int cmd_score(const ScoreArgs& args) {
  const Metric metric = metric_from_flag(args.metric);
  const auto engine = parse_engine(args.engine);
  if (!engine) throw ValidationError("unknown engine '" + args.engine + "' (use fast or naive)");
  const auto format = parse_report_format(args.format);
  if (!format) throw ValidationError("unknown format '" + args.format + "' (use csv or jsonl)");

  const Dataset ds = read_csv(args.input);
  const SilhouetteReport report = compute_silhouette(ds, metric, *engine, args.shards);
  if (!args.output.empty()) write_report(report, args.output, *format);

  std::cout << "metric=" << metric_name(report.metric) << " engine=" << engine_name(report.engine)
            << " shards=" << report.shards << " n=" << ds.num_points()
            << " k=" << ds.num_clusters() << '\n';
  std::cout << "mean_silhouette=" << format_double17(report.mean) << '\n';
  std::cout << "wall_time_ms=" << format_double17(report.wall_time_ms) << '\n';
  return kExitOk;
}

struct CompareArgs {
  std::string input;
  std::string metric = "sqeuclid";
  int shards = 0;
  double rtol = 1e-9;
  double atol = 1e-12;
  double inject_fault = 0.0;  // test hook: perturbs the fast report
};

int cmd_compare(const CompareArgs& args) {
  const Metric metric = metric_from_flag(args.metric);
  const Dataset ds = read_csv(args.input);

  SilhouetteReport fast = compute_silhouette(ds, metric, Engine::Fast, args.shards);
  const SilhouetteReport naive = compute_silhouette(ds, metric, Engine::Naive, 1);
  if (args.inject_fault != 0.0) {
    for (PointScore& p : fast.scores) p.s += args.inject_fault;
  }

  double max_abs = 0.0;
  double max_rel = 0.0;
  bool within = true;
  for (size_t i = 0; i < fast.scores.size(); ++i) {
    const double pairs[3][2] = {{fast.scores[i].a, naive.scores[i].a},
                                {fast.scores[i].b, naive.scores[i].b},
                                {fast.scores[i].s, naive.scores[i].s}};
    for (const auto& [got, ref] : pairs) {
      const double abs_dev = std::abs(got - ref);
      max_abs = std::max(max_abs, abs_dev);
      if (ref != 0.0) max_rel = std::max(max_rel, abs_dev / std::abs(ref));
      if (abs_dev > args.atol + args.rtol * std::abs(ref)) within = false;
    }
  }

  std::cout << "fast:  mean=" << format_double17(fast.mean)
            << " wall_time_ms=" << format_double17(fast.wall_time_ms) << '\n';
  std::cout << "naive: mean=" << format_double17(naive.mean)
            << " wall_time_ms=" << format_double17(naive.wall_time_ms) << '\n';
  std::cout << "max_abs_deviation=" << format_double17(max_abs) << '\n';
  std::cout << "max_rel_deviation=" << format_double17(max_rel) << '\n';
  if (!within) {
    std::cout << "tolerance exceeded (rtol=" << args.rtol << ", atol=" << args.atol << ")\n";
    return kExitTolerance;
  }
  std::cout << "within tolerance (rtol=" << args.rtol << ", atol=" << args.atol << ")\n";
  return kExitOk;
}

struct BenchArgs {
  std::vector<Index> sizes;
  Index d = 32;
  Index k = 10;
  std::string metric = "sqeuclid";
  std::vector<std::string> engines = {"fast", "naive"};
  int shards = 1;
  int trials = 3;
  uint64_t seed = 42;
  std::string records;
  std::string plot;
};

int cmd_bench(const BenchArgs& args) {
  BenchConfig config;
  config.sizes = args.sizes;
  config.d = args.d;
  config.k = args.k;
  config.metric = metric_from_flag(args.metric);
  config.engines.clear();
  for (const std::string& name : args.engines) {
    const auto engine = parse_engine(name);
    if (!engine) throw ValidationError("unknown engine '" + name + "' (use fast or naive)");
    config.engines.push_back(*engine);
  }
  config.shards = args.shards;
  config.trials = args.trials;
  config.seed = args.seed;

  const std::vector<BenchRecord> records = run_bench(config, &std::cout);
  if (!args.records.empty()) append_records_jsonl(records, args.records);
  if (!args.plot.empty()) write_scaling_svg(records, args.plot);
  return kExitOk;
}

struct GenArgs {
  Index n = 0;
  Index d = 0;
  Index k = 0;
  double spread = 1.0;
  double separation = 8.0;
  uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenArgs& args) {
  const Dataset ds = generate_blobs({.n = args.n,
                                     .d = args.d,
                                     .k = args.k,
                                     .spread = args.spread,
                                     .separation = args.separation,
                                     .seed = args.seed});
  write_points_csv(ds, args.output);
  std::cout << "wrote " << ds.num_points() << " points (d=" << ds.dims()
            << ", k=" << ds.num_clusters() << ") to " << args.output << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"silhouette clustering-evaluation toolkit"};
  app.require_subcommand(1);

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "score a labeled CSV dataset");
  score_cmd->add_option("--input", score.input, "CSV dataset path")->required();
  score_cmd->add_option("--metric", score.metric, "sqeuclid | cosine");
  score_cmd->add_option("--engine", score.engine, "fast | naive");
  score_cmd->add_option("--shards", score.shards, "worker count (0 = hardware)");
  score_cmd->add_option("--output", score.output, "report path");
  score_cmd->add_option("--format", score.format, "csv | jsonl");

  CompareArgs compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "run both engines and check they agree");
  compare_cmd->add_option("--input", compare.input, "CSV dataset path")->required();
  compare_cmd->add_option("--metric", compare.metric, "sqeuclid | cosine");
  compare_cmd->add_option("--shards", compare.shards, "fast-engine worker count");
  compare_cmd->add_option("--rtol", compare.rtol, "relative tolerance");
  compare_cmd->add_option("--atol", compare.atol, "absolute tolerance");
  compare_cmd->add_option("--inject-fault", compare.inject_fault)->group("");  // test hook

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "scaling benchmark on seeded blobs");
  bench_cmd->add_option("--sizes", bench.sizes, "comma list of dataset sizes")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--d", bench.d, "dimensions");
  bench_cmd->add_option("--k", bench.k, "clusters");
  bench_cmd->add_option("--metric", bench.metric, "sqeuclid | cosine");
  bench_cmd->add_option("--engines", bench.engines, "comma list: fast,naive")->delimiter(',');
  bench_cmd->add_option("--shards", bench.shards, "fast-engine worker count");
  bench_cmd->add_option("--trials", bench.trials, "trials per point (best-of)");
  bench_cmd->add_option("--seed", bench.seed, "blob generator seed");
  bench_cmd->add_option("--records", bench.records, "append JSONL records here");
  bench_cmd->add_option("--plot", bench.plot, "write SVG plot here");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a seeded Gaussian-blob CSV dataset");
  gen_cmd->add_option("--n", gen.n, "points")->required();
  gen_cmd->add_option("--d", gen.d, "dimensions")->required();
  gen_cmd->add_option("--k", gen.k, "clusters")->required();
  gen_cmd->add_option("--spread", gen.spread, "per-cluster standard deviation");
  gen_cmd->add_option("--separation", gen.separation, "inter-center distance scale");
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--output", gen.output, "CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (score_cmd->parsed()) return cmd_score(score);
    if (compare_cmd->parsed()) return cmd_compare(compare);
    if (bench_cmd->parsed()) return cmd_bench(bench);
    if (gen_cmd->parsed()) return cmd_gen(gen);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
