#pragma once

#include <span>
#include <string>
#include <vector>

#include "fastsil/types.hpp"

namespace fastsil {

/// Immutable validated dataset: a D x N feature matrix (one point per
/// column) plus dense cluster labels in [0, K). Safe to share read-only
/// across threads.
class Dataset {
 public:
  Index num_points() const { return points_.cols(); }
  Index dims() const { return points_.rows(); }
  Index num_clusters() const { return static_cast<Index>(cluster_sizes_.size()); }

  const Matrix& points() const { return points_; }
  Eigen::Ref<const Vector> point(Index i) const { return points_.col(i); }

  std::span<const int> labels() const { return labels_; }
  int label(Index i) const { return labels_[static_cast<size_t>(i)]; }

  const std::vector<Index>& cluster_sizes() const { return cluster_sizes_; }
  Index cluster_size(Index k) const { return cluster_sizes_[static_cast<size_t>(k)]; }

  /// Original labels in dense-index order (first appearance defines index 0).
  const std::vector<std::string>& cluster_names() const { return cluster_names_; }

 private:
  Dataset() = default;
  friend Dataset validate_and_densify(Matrix, std::vector<std::string>);

  Matrix points_;
  std::vector<int> labels_;
  std::vector<Index> cluster_sizes_;
  std::vector<std::string> cluster_names_;
};

/// Validates invariants (N >= 2, D >= 1, finite features, K >= 2, every
/// cluster non-empty) and remaps labels to dense indices by first-appearance
/// order. Throws ValidationError naming the violated invariant.
Dataset validate_and_densify(Matrix points, std::vector<std::string> labels);
Dataset validate_and_densify(Matrix points, const std::vector<int>& labels);

}  // namespace fastsil
