#include "safefollow/tracking_controller.hpp"

#include <algorithm>

namespace safefollow {

Vec3 desired_velocity(const Vec3& x1, const Vec3& x2,
                      const FilterParams& params) {
  Vec3 u = (x2 - x1) * params.v_max;
  if (params.clamp_desired) {
    const double lim = params.v_max;
    u.x = std::clamp(u.x, -lim, lim);
    u.y = std::clamp(u.y, -lim, lim);
    u.z = std::clamp(u.z, -lim, lim);
  }
  return u;
}

}  // namespace safefollow
