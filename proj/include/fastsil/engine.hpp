#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "fastsil/cosine.hpp"
#include "fastsil/dataset.hpp"
#include "fastsil/naive.hpp"
#include "fastsil/report.hpp"
#include "fastsil/squared_euclidean.hpp"

namespace fastsil {

/// W contiguous, ordered, disjoint index ranges covering [0, N) with sizes
/// differing by at most one. Drives the scoring phase.
struct ShardPlan {
  int num_shards = 1;
  std::vector<std::pair<Index, Index>> ranges;
};

/// min(requested, n) near-equal contiguous ranges.
ShardPlan plan_shards(Index n, int requested_workers);

/// Hardware concurrency, at least 1.
int default_shards();

// Phase-1 aggregation runs over fixed-size blocks that depend on N only,
// never on the worker count; folding the block partials in ascending block
// index therefore yields merged statistics that are bit-identical for any W.
inline constexpr Index kMaxAggregationBlocks = 256;
inline constexpr Index kMinAggregationBlockSize = 512;

inline Index aggregation_block_size(Index n) {
  const Index even = (n + kMaxAggregationBlocks - 1) / kMaxAggregationBlocks;
  return std::max(kMinAggregationBlockSize, even);
}

namespace detail {
/// Runs body(0..count-1) on `count` threads (inline when count == 1) and
/// rethrows the lowest-index worker exception after joining all workers.
void run_workers(int count, const std::function<void(int)>& body);
}  // namespace detail

/// Merged whole-dataset cluster statistics, computed block-parallel and
/// folded deterministically. These are the broadcast constants of phase 2.
template <typename Policy>
typename Policy::Stats aggregate_cluster_stats(const Dataset& ds, int workers) {
  const Index n = ds.num_points();
  const Index block = aggregation_block_size(n);
  const Index num_blocks = (n + block - 1) / block;

  std::vector<typename Policy::Stats> partials(static_cast<size_t>(num_blocks));
  const auto run_block = [&](Index b) {
    const Index begin = b * block;
    const Index end = std::min(n, begin + block);
    partials[static_cast<size_t>(b)] = Policy::partial(ds, begin, end);
  };

  const int pool = static_cast<int>(std::min<Index>(workers, num_blocks));
  if (pool <= 1) {
    for (Index b = 0; b < num_blocks; ++b) run_block(b);
  } else {
    std::atomic<Index> next{0};
    detail::run_workers(pool, [&](int) {
      for (Index b; (b = next.fetch_add(1, std::memory_order_relaxed)) < num_blocks;) {
        run_block(b);
      }
    });
  }

  typename Policy::Stats merged = std::move(partials.front());
  for (Index b = 1; b < num_blocks; ++b) {
    Policy::merge(merged, partials[static_cast<size_t>(b)]);
  }
  return merged;
}

/// Two-phase scoring into caller-provided dataset-order storage: block
/// aggregation, deterministic merge, then one scoring worker per plan range
/// reading the merged stats as shared immutable data. Auxiliary memory is
/// the block partials plus the broadcast stats, never O(N).
template <typename Policy>
void score_into(const Dataset& ds, const ShardPlan& plan, std::span<PointScore> out) {
  if (std::cmp_not_equal(out.size(), ds.num_points())) {
    throw std::invalid_argument("score_into: output size must equal the point count");
  }
  Policy::precheck(ds);

  const typename Policy::Stats merged = aggregate_cluster_stats<Policy>(ds, plan.num_shards);

  if (plan.num_shards <= 1) {
    Policy::score(ds, merged, 0, ds.num_points(), out);
  } else {
    detail::run_workers(static_cast<int>(plan.ranges.size()), [&](int s) {
      const auto [begin, end] = plan.ranges[static_cast<size_t>(s)];
      Policy::score(ds, merged, begin, end, out);
    });
  }
}

template <typename Policy>
SilhouetteReport run_two_phase(const Dataset& ds, const ShardPlan& plan) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<PointScore> scores(static_cast<size_t>(ds.num_points()));
  score_into<Policy>(ds, plan, scores);
  SilhouetteReport report = finalize_report(std::move(scores), Policy::metric, Engine::Fast,
                                            plan.num_shards, ds.cluster_names());
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Runtime-dispatched fast-path scoring (squared Euclidean or cosine).
void score_fast_into(const Dataset& ds, Metric metric, const ShardPlan& plan,
                     std::span<PointScore> out);

/// Entry point used by the CLI: fast engine via the two-phase plan, naive
/// engine via the single-threaded oracle. shards <= 0 selects the hardware
/// default. Plain Euclidean is rejected on the fast engine.
SilhouetteReport compute_silhouette(const Dataset& ds, Metric metric, Engine engine,
                                    int shards = 0);

}  // namespace fastsil
