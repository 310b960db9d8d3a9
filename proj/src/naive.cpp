#include "fastsil/naive.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <vector>

#include "fastsil/cosine.hpp"

namespace fastsil {

double pairwise_distance(Eigen::Ref<const Vector> p, Eigen::Ref<const Vector> q, Metric metric) {
  switch (metric) {
    case Metric::SquaredEuclidean:
      return (p - q).squaredNorm();
    case Metric::Euclidean:
      return std::sqrt((p - q).squaredNorm());
    case Metric::Cosine: {
      const double np = p.norm();
      const double nq = q.norm();
      if (np == 0.0 || nq == 0.0) {
        throw ValidationError("cosine distance undefined for zero vector");
      }
      return 1.0 - p.dot(q) / (np * nq);
    }
  }
  throw std::invalid_argument("unknown metric");
}

SilhouetteReport naive_silhouette(const Dataset& ds, Metric metric) {
  if (metric == Metric::Cosine) require_nonzero_norms(ds);
  const auto start = std::chrono::steady_clock::now();

  const Index n = ds.num_points();
  const Index num_clusters = ds.num_clusters();
  std::vector<PointScore> scores(static_cast<size_t>(n));
  Vector sums(num_clusters);  // the only per-row state: O(K) auxiliary

  for (Index i = 0; i < n; ++i) {
    sums.setZero();
    const auto p = ds.point(i);
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      sums(ds.label(j)) += pairwise_distance(p, ds.point(j), metric);
    }

    const int own = ds.label(i);
    const Index own_size = ds.cluster_size(own);
    const bool singleton = own_size == 1;
    const double a = singleton ? 0.0 : sums(own) / static_cast<double>(own_size - 1);

    double best = std::numeric_limits<double>::infinity();
    Index neighbour = -1;
    for (Index k = 0; k < num_clusters; ++k) {
      if (k == own) continue;
      const double mean = sums(k) / static_cast<double>(ds.cluster_size(k));
      if (mean < best) {
        best = mean;
        neighbour = k;
      }
    }
    scores[static_cast<size_t>(i)] =
        make_point_score(a, best, own, static_cast<int>(neighbour), singleton);
  }

  SilhouetteReport report =
      finalize_report(std::move(scores), metric, Engine::Naive, 1, ds.cluster_names());
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace fastsil
