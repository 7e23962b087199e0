#pragma once

#include "safefollow/vec3.hpp"

namespace safefollow {

enum class PlantModel {
  kIdeal,          // realized velocity equals the command
  kFirstOrderLag,  // velocity loop with time constant tau
};

struct PlantParams {
  PlantModel model = PlantModel::kIdeal;
  double tau = 0.3;  // s
  double dt = 0.01;  // s

  // dt > 0, tau > 0, and dt < tau for the lag model.
  void validate() const;
};

struct FollowerState {
  Vec3 pos;
  Vec3 vel;
};

/// Advances the follower by one explicit Euler step under velocity command u.
FollowerState step_follower(const FollowerState& s, const Vec3& u,
                            const PlantParams& p);

}  // namespace safefollow
