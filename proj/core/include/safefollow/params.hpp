#pragma once

#include "safefollow/vec3.hpp"

namespace safefollow {

enum class FilterMode {
  // Barrier derivative accounts only for the follower's own motion.
  kPaperBasic,
  // Adds the target's velocity to the barrier derivative, so an approaching
  // target forces the follower to retreat.
  kTargetAware,
};

struct FilterParams {
  double d_min = 3.0;  // m
  double alpha = 1.0;  // 1/s, linear class-K gain
  double v_max = 2.0;  // tracking gain (1/s) and per-axis clamp (m/s)
  FilterMode mode = FilterMode::kPaperBasic;
  bool clamp_desired = true;

  // Throws ValidationError naming the first violated invariant.
  void validate() const;
};

/// One control-loop step as logged by the simulator.
struct StepRecord {
  double t = 0.0;
  Vec3 follower_pos;
  Vec3 target_pos;
  Vec3 u_des;
  Vec3 u_star;
  double h = 0.0;
  double lambda = 0.0;
  bool constraint_active = false;
};

}  // namespace safefollow
