#include "fastsil/report.hpp"

#include <utility>

namespace fastsil {

double assemble_score(double a, double b) {
  if (a < 0.0 || b < 0.0) {
    throw std::invalid_argument("assemble_score: negative mean distance (a=" + std::to_string(a) +
                                ", b=" + std::to_string(b) + ")");
  }
  if (a == 0.0 && b == 0.0) return 0.0;
  return a <= b ? 1.0 - a / b : b / a - 1.0;
}

PointScore make_point_score(double own_mean, double min_foreign_mean, int own_cluster,
                            int neighbour_cluster, bool singleton) {
  PointScore score;
  score.own_cluster = own_cluster;
  score.neighbour_cluster = neighbour_cluster;
  score.b = min_foreign_mean;
  if (singleton) {
    score.a = 0.0;
    score.s = 0.0;
  } else {
    score.a = own_mean;
    score.s = assemble_score(own_mean, min_foreign_mean);
  }
  return score;
}

SilhouetteReport finalize_report(std::vector<PointScore> scores, Metric metric, Engine engine,
                                 int shards, std::vector<std::string> cluster_names) {
  if (scores.empty()) throw ValidationError("cannot finalize an empty report (N >= 2 required)");

  double sum = 0.0;  // left-to-right in dataset order, reproducible
  for (const PointScore& score : scores) sum += score.s;

  SilhouetteReport report;
  report.mean = sum / static_cast<double>(scores.size());
  report.scores = std::move(scores);
  report.metric = metric;
  report.engine = engine;
  report.shards = shards;
  report.cluster_names = std::move(cluster_names);
  return report;
}

}  // namespace fastsil
