#pragma once

#include <string>
#include <vector>

#include "fastsil/types.hpp"

namespace fastsil {

struct PointScore {
  double a = 0.0;  // mean distance to the other members of the own cluster
  double b = 0.0;  // smallest mean distance to a foreign cluster
  double s = 0.0;  // silhouette, in [-1, 1]
  int own_cluster = -1;
  int neighbour_cluster = -1;
};

struct SilhouetteReport {
  std::vector<PointScore> scores;  // dataset order
  double mean = 0.0;
  Metric metric = Metric::SquaredEuclidean;
  Engine engine = Engine::Fast;
  int shards = 1;
  double wall_time_ms = 0.0;
  std::vector<std::string> cluster_names;  // dense index -> original label
};

/// (b - a) / max(a, b); 0 when both means are 0 (coincident points across
/// clusters). Throws on negative input, which signals an upstream bug.
double assemble_score(double a, double b);

/// Applies the scoring conventions: a member of a singleton cluster gets
/// a = 0 and s = 0; everyone else gets assemble_score(a, b).
PointScore make_point_score(double own_mean, double min_foreign_mean, int own_cluster,
                            int neighbour_cluster, bool singleton);

/// Computes the overall mean by left-to-right summation in dataset order
/// (run-to-run reproducible) and attaches run metadata.
SilhouetteReport finalize_report(std::vector<PointScore> scores, Metric metric, Engine engine,
                                 int shards, std::vector<std::string> cluster_names = {});

}  // namespace fastsil
