#pragma once

#include <span>

#include "fastsil/dataset.hpp"
#include "fastsil/report.hpp"

namespace fastsil {

/// Squared Euclidean norm of a point — the per-point statistic of the
/// squared-Euclidean fast path.
template <typename Derived>
double point_sq_norm(const Eigen::MatrixBase<Derived>& p) {
  return p.squaredNorm();
}

/// Per-cluster aggregates for all K clusters under squared Euclidean
/// distance: member counts, sums of member squared norms, and the D x K
/// matrix of componentwise member sums. Mergeable as a commutative monoid.
struct SqEuclidClusterStats {
  IntVector counts;     // K
  Vector sq_norm_sums;  // K
  Matrix point_sums;    // D x K

  static SqEuclidClusterStats zero(Index num_clusters, Index dims);

  Index num_clusters() const { return counts.size(); }
  Index dims() const { return point_sums.rows(); }
};

/// Single joint pass over points [begin, end): counts, squared-norm sums,
/// and componentwise sums per cluster. Throws on a label outside [0, K).
SqEuclidClusterStats partial_cluster_stats(const Matrix& points, std::span<const int> labels,
                                           Index num_clusters, Index begin, Index end);
SqEuclidClusterStats partial_cluster_stats(const Dataset& ds, Index begin, Index end);

/// Componentwise sum; throws ValidationError on shape mismatch.
void merge_stats(SqEuclidClusterStats& into, const SqEuclidClusterStats& from);

/// Mean squared Euclidean distance from a point to cluster k, computed from
/// the aggregates alone. With exclude_self the point must be a member and the
/// denominator drops to count - 1 (the self-distance is 0, so the numerator
/// is unchanged). Clamped to >= 0 against cancellation.
double mean_dist_to_cluster(double sq_norm, Eigen::Ref<const Vector> point,
                            const SqEuclidClusterStats& stats, Index k, bool exclude_self);

/// Scores points [begin, end) against merged whole-dataset stats, writing
/// dataset-order slots of `out` (size N).
void score_range(const Dataset& ds, const SqEuclidClusterStats& stats, Index begin, Index end,
                 std::span<PointScore> out);

struct SqEuclidPolicy {
  using Stats = SqEuclidClusterStats;
  static constexpr Metric metric = Metric::SquaredEuclidean;

  static void precheck(const Dataset&) {}
  static Stats partial(const Dataset& ds, Index begin, Index end) {
    return partial_cluster_stats(ds, begin, end);
  }
  static void merge(Stats& into, const Stats& from) { merge_stats(into, from); }
  static void score(const Dataset& ds, const Stats& stats, Index begin, Index end,
                    std::span<PointScore> out) {
    score_range(ds, stats, begin, end, out);
  }
};

}  // namespace fastsil
