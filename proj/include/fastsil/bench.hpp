#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "fastsil/types.hpp"

namespace fastsil {

struct BenchRecord {
  Index n = 0;
  Index d = 0;
  Index k = 0;
  Metric metric = Metric::SquaredEuclidean;
  Engine engine = Engine::Fast;
  int shards = 1;
  double wall_time_ms = 0.0;  // best of trials
  double mean_silhouette = 0.0;
};

struct BenchConfig {
  std::vector<Index> sizes;
  Index d = 32;
  Index k = 10;
  Metric metric = Metric::SquaredEuclidean;
  std::vector<Engine> engines = {Engine::Fast, Engine::Naive};
  int shards = 1;
  int trials = 3;  // >= 3; best-of to suppress scheduler noise
  uint64_t seed = 42;
  double spread = 1.0;
  double separation = 8.0;
};

/// One seeded blob dataset per size; per engine, best-of-trials wall time.
/// Generation happens outside the timed section. Streams a text table row
/// per record when `table` is given.
std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream* table = nullptr);

void print_bench_table_header(std::ostream& out);
void print_bench_record(std::ostream& out, const BenchRecord& record);

/// Appends one JSON object per record (append-only log).
void append_records_jsonl(std::span<const BenchRecord> records,
                          const std::filesystem::path& path);

/// Self-contained two-panel scatter plot of wall time vs N, linear and
/// log10 y axes, one series per engine.
void write_scaling_svg(std::span<const BenchRecord> records, const std::filesystem::path& path);

}  // namespace fastsil
