#include "safefollow/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <thread>

#include "safefollow/errors.hpp"

namespace safefollow {
namespace {

using Mutator = std::function<void(ScenarioConfig&, double)>;

std::vector<SweepRow> run_sweep(const ScenarioConfig& base,
                                std::span<const double> values,
                                const Mutator& apply) {
  std::vector<ScenarioConfig> configs;
  configs.reserve(values.size());
  for (double v : values) {
    ScenarioConfig cfg = base;
    apply(cfg, v);
    cfg.validate();
    configs.push_back(std::move(cfg));
  }

  // Each run owns its state and RNG, so runs are dispatched in waves of at
  // most hardware_concurrency() and collected by index.
  const std::size_t wave =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (std::size_t first = 0; first < configs.size(); first += wave) {
    const std::size_t last = std::min(configs.size(), first + wave);
    std::vector<std::future<Metrics>> pending;
    for (std::size_t i = first; i < last; ++i) {
      pending.push_back(std::async(std::launch::async, [&cfg = configs[i]] {
        return summarize(run_scenario(cfg));
      }));
    }
    for (std::size_t i = first; i < last; ++i) {
      rows.push_back({values[i], pending[i - first].get()});
    }
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> alpha_sweep(const ScenarioConfig& base,
                                  std::span<const double> alphas) {
  if (alphas.empty()) throw ValidationError("alpha list must be non-empty");
  for (double a : alphas) {
    if (!(std::isfinite(a) && a > 0.0)) throw ValidationError("alpha must be > 0");
  }
  return run_sweep(base, alphas,
                   [](ScenarioConfig& cfg, double a) { cfg.filter.alpha = a; });
}

std::vector<SweepRow> latency_sweep(const ScenarioConfig& base,
                                    std::span<const double> latencies) {
  if (latencies.empty()) throw ValidationError("latency list must be non-empty");
  for (double l : latencies) {
    if (!(std::isfinite(l) && l >= 0.0))
      throw ValidationError("sensing_latency must be >= 0");
  }
  return run_sweep(base, latencies, [](ScenarioConfig& cfg, double l) {
    cfg.sensing_latency = l;
  });
}

}  // namespace safefollow
