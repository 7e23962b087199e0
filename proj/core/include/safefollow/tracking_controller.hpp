#pragma once

#include "safefollow/params.hpp"
#include "safefollow/vec3.hpp"

namespace safefollow {

// Proportional pursuit command (x2 - x1) * v_max. With clamp_desired each
// component is then limited to [-v_max, v_max].
Vec3 desired_velocity(const Vec3& x1, const Vec3& x2,
                      const FilterParams& params);

}  // namespace safefollow
