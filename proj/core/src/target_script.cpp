#include "safefollow/target_script.hpp"

#include <algorithm>
#include <cmath>

#include "safefollow/errors.hpp"

namespace safefollow {
namespace {

bool uses_waypoints(TargetKind kind) {
  return kind == TargetKind::kMultiTurn || kind == TargetKind::kFromFile;
}

const std::vector<Vec3>& checked_waypoints(const TargetScript& script) {
  if (script.waypoints.empty()) throw EmptyPath("target script has no waypoints");
  return script.waypoints;
}

// Time spent moving by t, after clamping to the motion window.
double motion_time(const TargetScript& script, double t) {
  return std::clamp(t, script.t_start, std::max(script.t_start, script.t_stop)) -
         script.t_start;
}

bool in_motion_window(const TargetScript& script, double t) {
  return t >= script.t_start && t < script.t_stop;
}

Vec3 straight_direction(TargetKind kind) {
  return kind == TargetKind::kStraightBackward ? Vec3{-1.0, 0.0, 0.0}
                                               : Vec3{1.0, 0.0, 0.0};
}

struct PathPoint {
  Vec3 pos;
  Vec3 dir;  // unit direction of the current leg; zero once the path is done
};

PathPoint locate_on_path(const std::vector<Vec3>& wp, double arc) {
  for (std::size_t i = 0; i + 1 < wp.size(); ++i) {
    const Vec3 leg = wp[i + 1] - wp[i];
    const double len = norm(leg);
    if (len <= 0.0) continue;
    if (arc < len) {
      const Vec3 dir = leg / len;
      return {wp[i] + dir * arc, dir};
    }
    arc -= len;
  }
  return {wp.back(), Vec3{}};
}

}  // namespace

void TargetScript::validate() const {
  if (!(std::isfinite(speed) && speed >= 0.0))
    throw ValidationError("speed must be >= 0");
  if (!std::isfinite(t_start) || t_start < 0.0)
    throw ValidationError("t_start must be >= 0");
  if (std::isnan(t_stop) || t_stop < t_start)
    throw ValidationError("t_stop must be >= t_start");
  if (!start.is_finite()) throw ValidationError("target_start must be finite");
  if (uses_waypoints(kind) && waypoints.empty())
    throw ValidationError("waypoints must be non-empty for waypoint scripts");
  for (const Vec3& w : waypoints) {
    if (!w.is_finite()) throw ValidationError("waypoints must be finite");
  }
}

std::vector<Vec3> default_multi_turn_waypoints() {
  return {{0.0, 0.0, 0.0},
          {10.0, 0.0, 0.0},
          {10.0, 10.0, 0.0},
          {0.0, 10.0, 0.0},
          {0.0, 0.0, 5.0}};
}

TargetScript default_multi_turn_script() {
  TargetScript s;
  s.kind = TargetKind::kMultiTurn;
  s.speed = 1.5;
  s.waypoints = default_multi_turn_waypoints();
  s.start = s.waypoints.front();
  return s;
}

Vec3 target_position(const TargetScript& script, double t) {
  const double travelled = motion_time(script, t) * script.speed;
  if (uses_waypoints(script.kind)) {
    return locate_on_path(checked_waypoints(script), travelled).pos;
  }
  return script.start + straight_direction(script.kind) * travelled;
}

Vec3 target_velocity(const TargetScript& script, double t) {
  if (uses_waypoints(script.kind)) {
    const auto& wp = checked_waypoints(script);
    if (!in_motion_window(script, t)) return {};
    const double travelled = motion_time(script, t) * script.speed;
    return locate_on_path(wp, travelled).dir * script.speed;
  }
  if (!in_motion_window(script, t)) return {};
  return straight_direction(script.kind) * script.speed;
}

double path_length(const TargetScript& script) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < script.waypoints.size(); ++i) {
    total += distance(script.waypoints[i], script.waypoints[i + 1]);
  }
  return total;
}

}  // namespace safefollow
