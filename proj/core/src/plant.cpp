#include "safefollow/plant.hpp"

#include <cmath>

#include "safefollow/errors.hpp"

namespace safefollow {

void PlantParams::validate() const {
  if (!(std::isfinite(dt) && dt > 0.0)) throw ValidationError("dt must be > 0");
  if (!(std::isfinite(tau) && tau > 0.0)) throw ValidationError("tau must be > 0");
  if (model == PlantModel::kFirstOrderLag && !(dt < tau)) {
    throw ValidationError("dt must be < tau for the lag plant");
  }
}

FollowerState step_follower(const FollowerState& s, const Vec3& u,
                            const PlantParams& p) {
  FollowerState next;
  switch (p.model) {
    case PlantModel::kIdeal:
      next.vel = u;
      break;
    case PlantModel::kFirstOrderLag:
      next.vel = s.vel + (p.dt / p.tau) * (u - s.vel);
      break;
  }
  next.pos = s.pos + next.vel * p.dt;
  return next;
}

}  // namespace safefollow
