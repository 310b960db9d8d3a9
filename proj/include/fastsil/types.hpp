#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fastsil {

using Index = Eigen::Index;

/// Dense column-major matrix holding one point per column (D rows, N columns).
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntVector = Eigen::VectorXi;

enum class Metric {
  SquaredEuclidean,
  Cosine,
  Euclidean,  // oracle only; no linear-time decomposition exists
};

enum class Engine {
  Fast,
  Naive,
};

/// Report tags: "squared_euclidean", "cosine", "euclidean_oracle".
std::string_view metric_name(Metric metric);
/// Report tags: "fast", "naive".
std::string_view engine_name(Engine engine);

/// Accepts CLI spellings ("sqeuclid", "cosine") plus the report tags.
std::optional<Metric> parse_metric(std::string_view name);
std::optional<Engine> parse_engine(std::string_view name);

/// Input violated a dataset or argument invariant (CLI exit code 2).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (CLI exit code 1).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fastsil
