#include "fastsil/cosine.hpp"

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

[[noreturn]] void throw_zero_norm(Index point) {
  throw ValidationError("cosine distance undefined for zero vector (point " +
                        std::to_string(point) + ")");
}

}  // namespace

Vector normalize_point(Eigen::Ref<const Vector> p) {
  const double norm = p.norm();
  if (norm == 0.0) throw ValidationError("cosine distance undefined for zero vector");
  return p / norm;
}

CosineClusterStats CosineClusterStats::zero(Index num_clusters, Index dims) {
  CosineClusterStats stats;
  stats.counts = IntVector::Zero(num_clusters);
  stats.unit_sums = Matrix::Zero(dims, num_clusters);
  return stats;
}

CosineClusterStats partial_unit_sums(const Matrix& points, std::span<const int> labels,
                                     Index num_clusters, Index begin, Index end) {
  check_range(begin, end, points.cols());
  auto stats = CosineClusterStats::zero(num_clusters, points.rows());
  for (Index i = begin; i < end; ++i) {
    const int k = labels[static_cast<size_t>(i)];
    if (k < 0 || k >= num_clusters) {
      throw ValidationError("cluster label " + std::to_string(k) + " of point " +
                            std::to_string(i) + " outside [0, " + std::to_string(num_clusters) +
                            ")");
    }
    const auto x = points.col(i);
    const double norm = x.norm();
    if (norm == 0.0) throw_zero_norm(i);
    stats.counts(k) += 1;
    stats.unit_sums.col(k) += x / norm;
  }
  return stats;
}

CosineClusterStats partial_unit_sums(const Dataset& ds, Index begin, Index end) {
  return partial_unit_sums(ds.points(), ds.labels(), ds.num_clusters(), begin, end);
}

void merge_stats(CosineClusterStats& into, const CosineClusterStats& from) {
  if (into.num_clusters() != from.num_clusters() || into.dims() != from.dims()) {
    throw ValidationError("cannot merge cluster stats of mismatched shape");
  }
  into.counts += from.counts;
  into.unit_sums += from.unit_sums;
}

double mean_dist_to_cluster(Eigen::Ref<const Vector> unit_point, const CosineClusterStats& stats,
                            Index k, bool exclude_self) {
  const int count = stats.counts(k);
  if (count < 1) throw std::invalid_argument("mean distance to an empty cluster");
  const double n = count;
  const double cross = stats.unit_sums.col(k).dot(unit_point);
  double mean;
  if (exclude_self) {
    if (count < 2) {
      throw std::invalid_argument(
          "exclude_self needs a cluster of >= 2 members; apply the singleton convention instead");
    }
    mean = (n - cross) / (n - 1.0);
  } else {
    mean = 1.0 - cross / n;
  }
  return std::clamp(mean, 0.0, 2.0);
}

void score_range(const Dataset& ds, const CosineClusterStats& stats, Index begin, Index end,
                 std::span<PointScore> out) {
  check_range(begin, end, ds.num_points());
  const Index num_clusters = stats.num_clusters();
  Vector unit(ds.dims());
  for (Index i = begin; i < end; ++i) {
    const auto x = ds.point(i);
    const double norm = x.norm();
    if (norm == 0.0) throw_zero_norm(i);
    unit = x / norm;
    const int own = ds.label(i);
    const bool singleton = stats.counts(own) == 1;

    double best = std::numeric_limits<double>::infinity();
    Index neighbour = -1;
    for (Index k = 0; k < num_clusters; ++k) {
      if (k == own) continue;
      const double mean = mean_dist_to_cluster(unit, stats, k, false);
      if (mean < best) {  // strict: ties keep the lowest cluster index
        best = mean;
        neighbour = k;
      }
    }
    const double a = singleton ? 0.0 : mean_dist_to_cluster(unit, stats, own, true);
    out[static_cast<size_t>(i)] =
        make_point_score(a, best, own, static_cast<int>(neighbour), singleton);
  }
}

void require_nonzero_norms(const Dataset& ds) {
  for (Index i = 0; i < ds.num_points(); ++i) {
    if (ds.point(i).norm() == 0.0) throw_zero_norm(i);
  }
}

}  // namespace fastsil
