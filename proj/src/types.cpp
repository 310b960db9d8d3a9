#include "fastsil/types.hpp"

namespace fastsil {

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::SquaredEuclidean:
      return "squared_euclidean";
    case Metric::Cosine:
      return "cosine";
    case Metric::Euclidean:
      return "euclidean_oracle";
  }
  return "unknown";
}

std::string_view engine_name(Engine engine) {
  return engine == Engine::Fast ? "fast" : "naive";
}

std::optional<Metric> parse_metric(std::string_view name) {
  if (name == "sqeuclid" || name == "squared_euclidean") return Metric::SquaredEuclidean;
  if (name == "cosine") return Metric::Cosine;
  if (name == "euclid" || name == "euclidean" || name == "euclidean_oracle") {
    return Metric::Euclidean;
  }
  return std::nullopt;
}

std::optional<Engine> parse_engine(std::string_view name) {
  if (name == "fast") return Engine::Fast;
  if (name == "naive") return Engine::Naive;
  return std::nullopt;
}

}  // namespace fastsil
