#pragma once

#include <optional>

#include "safefollow/params.hpp"
#include "safefollow/vec3.hpp"

namespace safefollow {

/// Feasible set { u : a . u >= b }.
struct HalfspaceConstraint {
  Vec3 a;
  double b = 0.0;
};

/// Result of the safety filter.
///
/// `slack` is a . u_star - b and `dual` is the KKT multiplier of the single
/// constraint. When the filter modified the input the constraint is active
/// (slack ~ 0, dual > 0); otherwise dual is exactly zero. `emergency` marks a
/// hold command issued because the geometry was degenerate; it carries no
/// KKT information.
struct FilterDecision {
  Vec3 u_star;
  bool was_modified = false;
  double slack = 0.0;
  double dual = 0.0;
  bool emergency = false;
};

/// h(x) = ||x2 - x1|| - d_min. Positive inside the safe set.
double barrier_value(const Vec3& x1, const Vec3& x2, double d_min);

/// dh/dx1 = -(x2 - x1) / ||x2 - x1||, a unit vector pointing away from the
/// target. Throws DegenerateSeparation.
Vec3 barrier_gradient(const Vec3& x1, const Vec3& x2);

/// Builds the CBF condition hdot(x, u) >= -alpha h(x) for the follower
/// modelled as xdot1 = u, rearranged as a . u >= b.
///
/// In kTargetAware mode the target's own motion enters hdot, which moves the
/// bound by -(x2 - x1) . target_vel / lambda.
///
/// Throws DegenerateSeparation, MissingTargetVelocity (kTargetAware without
/// `target_vel`) and NonFiniteInput.
HalfspaceConstraint cbf_constraint(const Vec3& x1, const Vec3& x2,
                                   const std::optional<Vec3>& target_vel,
                                   const FilterParams& params);

/// Closed-form minimiser of ||u - u_des||^2 subject to a . u >= b, i.e. the
/// Euclidean projection of u_des onto the halfspace.
///
/// Throws InfeasibleConstraint when ||a|| <= 1e-12 and b > 1e-12.
FilterDecision solve_filter_qp(const Vec3& u_des, const HalfspaceConstraint& c);

/// Tracking controller followed by the safety filter. Coincident vehicles
/// yield an emergency hold (u_star = 0) instead of an exception.
FilterDecision filter_pipeline(const Vec3& x1, const Vec3& x2,
                               const std::optional<Vec3>& target_vel,
                               const FilterParams& params);

}  // namespace safefollow
