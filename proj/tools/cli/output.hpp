#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "safefollow/metrics.hpp"
#include "safefollow/sweep.hpp"

namespace safefollow::cli {

inline constexpr std::string_view kLogHeader =
    "t,f_x,f_y,f_z,g_x,g_y,g_z,udes_x,udes_y,udes_z,u_x,u_y,u_z,h,lambda,active";

// Shortest decimal text that parses back to exactly `v`.
std::string format_real(double v);

void write_log_csv(std::ostream& os, const SimLog& log);

/// Parses a log written by write_log_csv. Throws std::runtime_error on a bad
/// header or malformed row.
std::vector<StepRecord> read_log_csv(std::istream& is);

/// Metrics fields plus the resolved config in one flat object.
nlohmann::json metrics_to_json(const Metrics& m, const ScenarioConfig& cfg);

/// One row per swept value; `column` names the swept parameter.
void write_sweep_csv(std::ostream& os, std::string_view column,
                     std::span<const SweepRow> rows);

}  // namespace safefollow::cli
