#include "fastsil/dataset.hpp"

#include <cmath>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fastsil {

namespace {

std::string locate_non_finite(const Matrix& points) {
  for (Index i = 0; i < points.cols(); ++i) {
    for (Index l = 0; l < points.rows(); ++l) {
      if (!std::isfinite(points(l, i))) {
        return "point " + std::to_string(i) + ", dimension " + std::to_string(l);
      }
    }
  }
  return "unknown position";
}

}  // namespace

Dataset validate_and_densify(Matrix points, std::vector<std::string> labels) {
  const Index n = points.cols();
  const Index d = points.rows();
  if (static_cast<size_t>(n) != labels.size()) {
    throw ValidationError("label count (" + std::to_string(labels.size()) +
                          ") does not match point count (" + std::to_string(n) + ")");
  }
  if (n < 2) throw ValidationError("dataset needs at least 2 points, got " + std::to_string(n));
  if (d < 1) throw ValidationError("dataset needs at least 1 feature dimension");
  if (!points.allFinite()) {
    throw ValidationError("non-finite feature value at " + locate_non_finite(points));
  }

  Dataset ds;
  ds.labels_.resize(labels.size());
  std::unordered_map<std::string, int> dense;
  dense.reserve(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = dense.try_emplace(labels[i], static_cast<int>(ds.cluster_names_.size()));
    if (inserted) {
      ds.cluster_names_.push_back(labels[i]);
      ds.cluster_sizes_.push_back(0);
    }
    ds.labels_[i] = it->second;
    ++ds.cluster_sizes_[static_cast<size_t>(it->second)];
  }

  if (ds.cluster_names_.size() < 2) {
    throw ValidationError(
        "silhouette undefined for a single cluster: need K >= 2, got K = " +
        std::to_string(ds.cluster_names_.size()));
  }

  ds.points_ = std::move(points);
  return ds;
}

Dataset validate_and_densify(Matrix points, const std::vector<int>& labels) {
  std::vector<std::string> names;
  names.reserve(labels.size());
  for (int label : labels) names.push_back(std::to_string(label));
  return validate_and_densify(std::move(points), std::move(names));
}

}  // namespace fastsil
