#pragma once

#include <cstdint>

#include "fastsil/dataset.hpp"

namespace fastsil {

/// SplitMix64 (Steele, Lea, Flood 2014): state advances by the golden-ratio
/// increment 0x9E3779B97F4A7C15 and is finalized by two xor-shift-multiply
/// rounds. Chosen so generated datasets are reproducible from the seed alone,
/// independent of any standard-library engine.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1): the top 53 bits scaled by 2^-53.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

/// Standard normals via the Box-Muller transform over SplitMix64 uniforms:
/// r = sqrt(-2 ln(1 - u1)), theta = 2 pi u2, yielding the pair
/// (r cos theta, r sin theta); the second value is cached for the next call.
class GaussianStream {
 public:
  explicit GaussianStream(uint64_t seed) : rng_(seed) {}
  double next();

 private:
  SplitMix64 rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct BlobSpec {
  Index n = 0;
  Index d = 0;
  Index k = 0;
  double spread = 1.0;      // per-cluster standard deviation
  double separation = 8.0;  // inter-center distance scale
  uint64_t seed = 0;
};

/// k Gaussian blobs: centers are separation * N(0, I), point i belongs to
/// blob i mod k at center + spread * N(0, I). The normal stream is consumed
/// centers-first, then points in dataset order, dimensions in order, so the
/// same spec always yields the byte-identical dataset.
Dataset generate_blobs(const BlobSpec& spec);

}  // namespace fastsil
