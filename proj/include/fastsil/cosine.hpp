#pragma once

#include <span>

#include "fastsil/dataset.hpp"
#include "fastsil/report.hpp"

namespace fastsil {

/// Unit-normalized copy of a point. Throws ValidationError on a zero-norm
/// vector (cosine distance is undefined there).
Vector normalize_point(Eigen::Ref<const Vector> p);

/// Per-cluster aggregates for all K clusters under cosine distance: member
/// counts and the D x K matrix of summed unit vectors.
struct CosineClusterStats {
  IntVector counts;  // K
  Matrix unit_sums;  // D x K

  static CosineClusterStats zero(Index num_clusters, Index dims);

  Index num_clusters() const { return counts.size(); }
  Index dims() const { return unit_sums.rows(); }
};

/// Single pass over points [begin, end), summing unit-normalized vectors per
/// cluster. Throws on out-of-range labels or zero-norm points.
CosineClusterStats partial_unit_sums(const Matrix& points, std::span<const int> labels,
                                     Index num_clusters, Index begin, Index end);
CosineClusterStats partial_unit_sums(const Dataset& ds, Index begin, Index end);

void merge_stats(CosineClusterStats& into, const CosineClusterStats& from);

/// Mean cosine distance from a unit-normalized point to cluster k. With
/// exclude_self the denominator drops to count - 1 (self cosine distance is
/// 0). Clamped into [0, 2], the cosine-distance codomain.
double mean_dist_to_cluster(Eigen::Ref<const Vector> unit_point, const CosineClusterStats& stats,
                            Index k, bool exclude_self);

void score_range(const Dataset& ds, const CosineClusterStats& stats, Index begin, Index end,
                 std::span<PointScore> out);

/// Throws ValidationError naming the first zero-norm point, if any.
void require_nonzero_norms(const Dataset& ds);

struct CosinePolicy {
  using Stats = CosineClusterStats;
  static constexpr Metric metric = Metric::Cosine;

  static void precheck(const Dataset& ds) { require_nonzero_norms(ds); }
  static Stats partial(const Dataset& ds, Index begin, Index end) {
    return partial_unit_sums(ds, begin, end);
  }
  static void merge(Stats& into, const Stats& from) { merge_stats(into, from); }
  static void score(const Dataset& ds, const Stats& stats, Index begin, Index end,
                    std::span<PointScore> out) {
    score_range(ds, stats, begin, end, out);
  }
};

}  // namespace fastsil
