#include "fastsil/engine.hpp"

#include <exception>
#include <thread>

namespace fastsil {

ShardPlan plan_shards(Index n, int requested_workers) {
  if (n < 1) throw std::invalid_argument("plan_shards: need at least one point");
  if (requested_workers < 1) throw std::invalid_argument("plan_shards: need at least one worker");

  const Index w = std::min<Index>(requested_workers, n);
  ShardPlan plan;
  plan.num_shards = static_cast<int>(w);
  plan.ranges.reserve(static_cast<size_t>(w));
  const Index base = n / w;
  const Index extra = n % w;  // first `extra` shards take one more point
  Index begin = 0;
  for (Index s = 0; s < w; ++s) {
    const Index size = base + (s < extra ? 1 : 0);
    plan.ranges.emplace_back(begin, begin + size);
    begin += size;
  }
  return plan;
}

int default_shards() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace detail {

void run_workers(int count, const std::function<void(int)>& body) {
  if (count <= 1) {
    body(0);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<size_t>(count));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(count));
  for (int w = 0; w < count; ++w) {
    workers.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        errors[static_cast<size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& worker : workers) worker.join();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace detail

void score_fast_into(const Dataset& ds, Metric metric, const ShardPlan& plan,
                     std::span<PointScore> out) {
  switch (metric) {
    case Metric::SquaredEuclidean:
      score_into<SqEuclidPolicy>(ds, plan, out);
      return;
    case Metric::Cosine:
      score_into<CosinePolicy>(ds, plan, out);
      return;
    case Metric::Euclidean:
      break;
  }
  throw ValidationError(
      "no fast engine for plain euclidean distance (no aggregable decomposition); "
      "use the naive engine");
}

SilhouetteReport compute_silhouette(const Dataset& ds, Metric metric, Engine engine, int shards) {
  if (engine == Engine::Naive) return naive_silhouette(ds, metric);

  const int requested = shards > 0 ? shards : default_shards();
  const ShardPlan plan = plan_shards(ds.num_points(), requested);
  switch (metric) {
    case Metric::SquaredEuclidean:
      return run_two_phase<SqEuclidPolicy>(ds, plan);
    case Metric::Cosine:
      return run_two_phase<CosinePolicy>(ds, plan);
    case Metric::Euclidean:
      break;
  }
  throw ValidationError(
      "no fast engine for plain euclidean distance (no aggregable decomposition); "
      "use the naive engine");
}

}  // namespace fastsil
