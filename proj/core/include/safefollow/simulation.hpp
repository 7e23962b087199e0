#pragma once

#include <cstdint>
#include <vector>

#include "safefollow/params.hpp"
#include "safefollow/plant.hpp"
#include "safefollow/target_script.hpp"
#include "safefollow/vec3.hpp"

namespace safefollow {

struct ScenarioConfig {
  TargetScript script;
  PlantParams plant;
  FilterParams filter;
  Vec3 follower_start;
  double duration = 30.0;         // s
  double sensing_latency = 0.0;   // s
  double noise_std = 0.0;         // m, per axis, on sensed target position
  std::uint64_t rng_seed = 0;
  double collision_radius = 0.5;  // m

  // Validates this bundle and every nested one. Throws ValidationError.
  void validate() const;

  // floor(duration / dt) + 1, robust to dt not dividing duration exactly in
  // binary floating point.
  std::size_t step_count() const;
};

struct SimLog {
  std::vector<StepRecord> records;
  ScenarioConfig config;
};

/// Runs the closed loop sense -> track -> filter -> actuate -> log from
/// t = 0 to t = duration inclusive. Logged lambda and h use ground-truth
/// positions; only the controller sees latency and noise.
///
/// Identical configs (including rng_seed) give bit-identical logs.
SimLog run_scenario(const ScenarioConfig& cfg);

}  // namespace safefollow
