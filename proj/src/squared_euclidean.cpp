#include "fastsil/squared_euclidean.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace fastsil {

namespace {

void check_range(Index begin, Index end, Index n) {
  if (begin < 0 || end > n || begin > end) {
    throw std::invalid_argument("point range [" + std::to_string(begin) + ", " +
                                std::to_string(end) + ") outside dataset of size " +
                                std::to_string(n));
  }
}

void check_label(int label, Index num_clusters, Index point) {
  if (label < 0 || label >= num_clusters) {
    throw ValidationError("cluster label " + std::to_string(label) + " of point " +
                          std::to_string(point) + " outside [0, " + std::to_string(num_clusters) +
                          ")");
  }
}

}  // namespace

SqEuclidClusterStats SqEuclidClusterStats::zero(Index num_clusters, Index dims) {
  SqEuclidClusterStats stats;
  stats.counts = IntVector::Zero(num_clusters);
  stats.sq_norm_sums = Vector::Zero(num_clusters);
  stats.point_sums = Matrix::Zero(dims, num_clusters);
  return stats;
}

SqEuclidClusterStats partial_cluster_stats(const Matrix& points, std::span<const int> labels,
                                           Index num_clusters, Index begin, Index end) {
  check_range(begin, end, points.cols());
  auto stats = SqEuclidClusterStats::zero(num_clusters, points.rows());
  for (Index i = begin; i < end; ++i) {
    const int k = labels[static_cast<size_t>(i)];
    check_label(k, num_clusters, i);
    const auto x = points.col(i);
    stats.counts(k) += 1;
    stats.sq_norm_sums(k) += point_sq_norm(x);
    stats.point_sums.col(k) += x;
  }
  return stats;
}

SqEuclidClusterStats partial_cluster_stats(const Dataset& ds, Index begin, Index end) {
  return partial_cluster_stats(ds.points(), ds.labels(), ds.num_clusters(), begin, end);
}

void merge_stats(SqEuclidClusterStats& into, const SqEuclidClusterStats& from) {
  if (into.num_clusters() != from.num_clusters() || into.dims() != from.dims()) {
    throw ValidationError("cannot merge cluster stats of mismatched shape");
  }
  into.counts += from.counts;
  into.sq_norm_sums += from.sq_norm_sums;
  into.point_sums += from.point_sums;
}

double mean_dist_to_cluster(double sq_norm, Eigen::Ref<const Vector> point,
                            const SqEuclidClusterStats& stats, Index k, bool exclude_self) {
  const int count = stats.counts(k);
  if (count < 1) throw std::invalid_argument("mean distance to an empty cluster");
  const double n = count;
  const double cross = stats.point_sums.col(k).dot(point);
  double mean;
  if (exclude_self) {
    if (count < 2) {
      throw std::invalid_argument(
          "exclude_self needs a cluster of >= 2 members; apply the singleton convention instead");
    }
    mean = (n * sq_norm + stats.sq_norm_sums(k) - 2.0 * cross) / (n - 1.0);
  } else {
    mean = sq_norm + stats.sq_norm_sums(k) / n - 2.0 * cross / n;
  }
  return std::max(0.0, mean);
}

void score_range(const Dataset& ds, const SqEuclidClusterStats& stats, Index begin, Index end,
                 std::span<PointScore> out) {
  check_range(begin, end, ds.num_points());
  const Index num_clusters = stats.num_clusters();
  for (Index i = begin; i < end; ++i) {
    const auto x = ds.point(i);
    const double sq_norm = point_sq_norm(x);
    const int own = ds.label(i);
    const bool singleton = stats.counts(own) == 1;

    double best = std::numeric_limits<double>::infinity();
    Index neighbour = -1;
    for (Index k = 0; k < num_clusters; ++k) {
      if (k == own) continue;
      const double mean = mean_dist_to_cluster(sq_norm, x, stats, k, false);
      if (mean < best) {  // strict: ties keep the lowest cluster index
        best = mean;
        neighbour = k;
      }
    }
    const double a = singleton ? 0.0 : mean_dist_to_cluster(sq_norm, x, stats, own, true);
    out[static_cast<size_t>(i)] =
        make_point_score(a, best, own, static_cast<int>(neighbour), singleton);
  }
}

}  // namespace fastsil
