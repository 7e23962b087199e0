#pragma once

#include <span>
#include <vector>

#include "safefollow/metrics.hpp"
#include "safefollow/simulation.hpp"

namespace safefollow {

struct SweepRow {
  double value = 0.0;  // the swept parameter (alpha or latency in s)
  Metrics metrics;
};

// Runs are independent and may execute concurrently; rows are returned in
// input order and are identical to sequential execution.
std::vector<SweepRow> alpha_sweep(const ScenarioConfig& base,
                                  std::span<const double> alphas);

std::vector<SweepRow> latency_sweep(const ScenarioConfig& base,
                                    std::span<const double> latencies);

}  // namespace safefollow
