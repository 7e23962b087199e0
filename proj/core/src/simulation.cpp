#include "safefollow/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "safefollow/errors.hpp"
#include "safefollow/safety_kernel.hpp"
#include "safefollow/tracking_controller.hpp"

namespace safefollow {
namespace {

// Same threshold StepRecord uses to call the filter active.
constexpr double kActiveTolerance = 1e-9;

class PositionSensor {
 public:
  PositionSensor(const ScenarioConfig& cfg)
      : script_(cfg.script),
        latency_(cfg.sensing_latency),
        noise_std_(cfg.noise_std),
        rng_(cfg.rng_seed) {}

  double sample_time(double t) const { return std::max(0.0, t - latency_); }

  Vec3 position(double t) {
    Vec3 p = target_position(script_, sample_time(t));
    if (noise_std_ > 0.0) {
      p.x += noise_std_ * normal_(rng_);
      p.y += noise_std_ * normal_(rng_);
      p.z += noise_std_ * normal_(rng_);
    }
    return p;
  }

  Vec3 velocity(double t) const {
    return target_velocity(script_, sample_time(t));
  }

 private:
  const TargetScript& script_;
  double latency_;
  double noise_std_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace

void ScenarioConfig::validate() const {
  script.validate();
  plant.validate();
  filter.validate();
  if (!follower_start.is_finite())
    throw ValidationError("follower_start must be finite");
  if (!(std::isfinite(duration) && duration > 0.0))
    throw ValidationError("duration must be > 0");
  if (!(std::isfinite(sensing_latency) && sensing_latency >= 0.0))
    throw ValidationError("sensing_latency must be >= 0");
  if (!(std::isfinite(noise_std) && noise_std >= 0.0))
    throw ValidationError("noise_std must be >= 0");
  if (!(std::isfinite(collision_radius) && collision_radius >= 0.0))
    throw ValidationError("collision_radius must be >= 0");
}

std::size_t ScenarioConfig::step_count() const {
  return static_cast<std::size_t>(std::floor(duration / plant.dt + 1e-9)) + 1;
}

SimLog run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();

  SimLog log;
  log.config = cfg;
  const std::size_t n = cfg.step_count();
  log.records.reserve(n);

  PositionSensor sensor(log.config);
  const bool wants_velocity = cfg.filter.mode == FilterMode::kTargetAware;
  FollowerState follower{cfg.follower_start, Vec3{}};

  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * cfg.plant.dt;

    const Vec3 sensed_pos = sensor.position(t);
    const std::optional<Vec3> sensed_vel =
        wants_velocity ? std::optional<Vec3>(sensor.velocity(t)) : std::nullopt;

    const Vec3 u_des = desired_velocity(follower.pos, sensed_pos, cfg.filter);
    const FilterDecision decision =
        filter_pipeline(follower.pos, sensed_pos, sensed_vel, cfg.filter);

    StepRecord rec;
    rec.t = t;
    rec.follower_pos = follower.pos;
    rec.target_pos = target_position(cfg.script, t);
    rec.u_des = u_des;
    rec.u_star = decision.u_star;
    rec.lambda = distance(rec.follower_pos, rec.target_pos);
    rec.h = rec.lambda - cfg.filter.d_min;
    rec.constraint_active =
        max_abs_component(decision.u_star - u_des) > kActiveTolerance;
    log.records.push_back(rec);

    follower = step_follower(follower, decision.u_star, cfg.plant);
  }
  return log;
}

}  // namespace safefollow
