#pragma once

#include <limits>
#include <vector>

#include "safefollow/vec3.hpp"

namespace safefollow {

enum class TargetKind {
  kStraightForward,   // +x from `start`
  kStraightBackward,  // -x from `start`, toward a follower placed behind it
  kMultiTurn,         // piecewise-linear traversal of `waypoints`
  kFromFile,          // same traversal, waypoints supplied by a config file
};

/// Scripted target motion. The target holds still before t_start, moves at
/// `speed` until t_stop (or until the path is exhausted), then holds.
struct TargetScript {
  TargetKind kind = TargetKind::kStraightForward;
  double speed = 1.0;  // m/s
  Vec3 start{10.0, 0.0, 0.0};
  std::vector<Vec3> waypoints;
  double t_start = 0.0;
  double t_stop = std::numeric_limits<double>::infinity();

  void validate() const;
};

// (0,0,0) -> (10,0,0) -> (10,10,0) -> (0,10,0) -> (0,0,5)
std::vector<Vec3> default_multi_turn_waypoints();

// MultiTurn script over the default waypoints at 1.5 m/s.
TargetScript default_multi_turn_script();

/// Closed-form target position at time t (t >= 0).
/// Throws EmptyPath for waypoint scripts without waypoints.
Vec3 target_position(const TargetScript& script, double t);

/// Right-derivative of target_position: at a leg boundary the upcoming
/// leg's velocity is returned; zero while holding.
Vec3 target_velocity(const TargetScript& script, double t);

/// Total length of the waypoint polyline (0 for straight scripts).
double path_length(const TargetScript& script);

}  // namespace safefollow
