#pragma once

#include <optional>

#include "safefollow/simulation.hpp"

namespace safefollow {

struct Metrics {
  double lambda_mean = 0.0;
  double lambda_min = 0.0;
  double h_min = 0.0;
  bool collision = false;
  // Seconds from target-motion onset until the follower's realized speed
  // first exceeds 10% of the target speed. Empty if the target never moves
  // or the follower never responds within the run.
  std::optional<double> response_time;
  double steady_state_lambda = 0.0;  // mean over the final 20% of records
};

inline constexpr double kResponseSpeedFraction = 0.1;

/// Throws EmptyLog.
Metrics summarize(const SimLog& log);

}  // namespace safefollow
