#pragma once

#include "fastsil/dataset.hpp"
#include "fastsil/report.hpp"

namespace fastsil {

/// Textbook pairwise distance. Cosine throws ValidationError on a zero-norm
/// operand; Euclidean is available here and only here.
double pairwise_distance(Eigen::Ref<const Vector> p, Eigen::Ref<const Vector> q, Metric metric);

/// Reference Theta(N^2 * D) silhouette by full pairwise scan, one row of
/// per-cluster accumulators at a time (O(K + D) auxiliary memory).
/// Single-threaded by design: this is the trusted baseline, not the fast path.
SilhouetteReport naive_silhouette(const Dataset& ds, Metric metric);

}  // namespace fastsil
