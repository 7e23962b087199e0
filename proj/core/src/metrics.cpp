#include "safefollow/metrics.hpp"

#include <algorithm>

#include "safefollow/errors.hpp"

namespace safefollow {
namespace {

// Realized follower speed is recovered from consecutive logged positions,
// pos[k] = pos[k-1] + vel[k] * dt for both plant models, so the metric can be
// recomputed from an exported log alone.
std::optional<double> response_time(const SimLog& log) {
  const TargetScript& script = log.config.script;
  const double threshold = kResponseSpeedFraction * script.speed;
  if (!(script.speed > 0.0)) return std::nullopt;

  const double dt = log.config.plant.dt;
  const auto& recs = log.records;
  for (std::size_t k = 1; k < recs.size(); ++k) {
    if (recs[k].t < script.t_start) continue;
    const double speed =
        norm(recs[k].follower_pos - recs[k - 1].follower_pos) / dt;
    if (speed > threshold) return recs[k].t - script.t_start;
  }
  return std::nullopt;
}

}  // namespace

Metrics summarize(const SimLog& log) {
  const auto& recs = log.records;
  if (recs.empty()) throw EmptyLog("cannot summarize an empty log");

  Metrics m;
  double sum = 0.0;
  m.lambda_min = recs.front().lambda;
  m.h_min = recs.front().h;
  for (const StepRecord& r : recs) {
    sum += r.lambda;
    m.lambda_min = std::min(m.lambda_min, r.lambda);
    m.h_min = std::min(m.h_min, r.h);
  }
  m.lambda_mean = sum / static_cast<double>(recs.size());
  m.collision = m.lambda_min <= log.config.collision_radius;
  m.response_time = response_time(log);

  const std::size_t tail = std::max<std::size_t>(1, recs.size() / 5);
  double tail_sum = 0.0;
  for (std::size_t k = recs.size() - tail; k < recs.size(); ++k) {
    tail_sum += recs[k].lambda;
  }
  m.steady_state_lambda = tail_sum / static_cast<double>(tail);
  return m;
}

}  // namespace safefollow
