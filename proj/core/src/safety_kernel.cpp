#include "safefollow/safety_kernel.hpp"

#include <string>

#include "safefollow/errors.hpp"
#include "safefollow/tracking_controller.hpp"

namespace safefollow {
namespace {

constexpr double kVanishingNorm = 1e-12;

void require_finite(const Vec3& v, const char* what) {
  if (!v.is_finite()) throw NonFiniteInput(std::string(what) + " is not finite");
}

}  // namespace

double barrier_value(const Vec3& x1, const Vec3& x2, double d_min) {
  return distance(x1, x2) - d_min;
}

Vec3 barrier_gradient(const Vec3& x1, const Vec3& x2) {
  // h depends on x1 through ||x2 - x1||, so moving x1 toward x2 lowers h.
  return -unit_toward(x1, x2);
}

HalfspaceConstraint cbf_constraint(const Vec3& x1, const Vec3& x2,
                                   const std::optional<Vec3>& target_vel,
                                   const FilterParams& params) {
  require_finite(x1, "follower position");
  require_finite(x2, "target position");

  const Vec3 los = unit_toward(x1, x2);
  const double h = barrier_value(x1, x2, params.d_min);

  // Single integrator xdot1 = u: L_f h = 0, L_g h = dh/dx1 = -los.
  HalfspaceConstraint c{-los, -params.alpha * h};
  if (params.mode == FilterMode::kTargetAware) {
    if (!target_vel) {
      throw MissingTargetVelocity("target-aware filtering needs a target velocity");
    }
    require_finite(*target_vel, "target velocity");
    c.b -= dot(los, *target_vel);
  }
  return c;
}

FilterDecision solve_filter_qp(const Vec3& u_des, const HalfspaceConstraint& c) {
  require_finite(u_des, "desired input");
  require_finite(c.a, "constraint normal");
  if (!std::isfinite(c.b)) throw NonFiniteInput("constraint bound is not finite");

  const double a_sq = dot(c.a, c.a);
  const double slack_des = dot(c.a, u_des) - c.b;

  if (a_sq <= kVanishingNorm * kVanishingNorm) {
    if (c.b > kVanishingNorm) {
      throw InfeasibleConstraint("constraint 0 . u >= b with b > 0");
    }
    return {u_des, false, slack_des, 0.0, false};
  }

  if (slack_des >= 0.0) return {u_des, false, slack_des, 0.0, false};

  const double dual = -slack_des / a_sq;
  const Vec3 u_star = u_des + dual * c.a;
  return {u_star, true, dot(c.a, u_star) - c.b, dual, false};
}

FilterDecision filter_pipeline(const Vec3& x1, const Vec3& x2,
                               const std::optional<Vec3>& target_vel,
                               const FilterParams& params) {
  const Vec3 u_des = desired_velocity(x1, x2, params);
  try {
    return solve_filter_qp(u_des, cbf_constraint(x1, x2, target_vel, params));
  } catch (const DegenerateSeparation&) {
    return {Vec3{}, true, 0.0, 0.0, true};
  }
}

}  // namespace safefollow
