#include "fastsil/blobs.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace fastsil {

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = rng_.next_unit();
  const double u2 = rng_.next_unit();
  const double r = std::sqrt(-2.0 * std::log1p(-u1));  // ln(1 - u1) > -inf since u1 < 1
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Dataset generate_blobs(const BlobSpec& spec) {
  if (spec.k < 2) throw ValidationError("blob spec needs k >= 2, got " + std::to_string(spec.k));
  if (spec.n < spec.k) {
    throw ValidationError("blob spec needs n >= k, got n = " + std::to_string(spec.n) +
                          ", k = " + std::to_string(spec.k));
  }
  if (spec.d < 1) throw ValidationError("blob spec needs d >= 1, got " + std::to_string(spec.d));
  if (!(spec.spread > 0.0)) {
    throw ValidationError("blob spec needs spread > 0, got " + std::to_string(spec.spread));
  }

  GaussianStream normals(spec.seed);

  Matrix centers(spec.d, spec.k);
  for (Index k = 0; k < spec.k; ++k) {
    for (Index l = 0; l < spec.d; ++l) centers(l, k) = spec.separation * normals.next();
  }

  Matrix points(spec.d, spec.n);
  std::vector<int> labels(static_cast<size_t>(spec.n));
  for (Index i = 0; i < spec.n; ++i) {
    const Index k = i % spec.k;  // interleaved, so first appearances are 0..k-1
    labels[static_cast<size_t>(i)] = static_cast<int>(k);
    for (Index l = 0; l < spec.d; ++l) {
      points(l, i) = centers(l, k) + spec.spread * normals.next();
    }
  }

  return validate_and_densify(std::move(points), labels);
}

}  // namespace fastsil
