#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "safefollow/simulation.hpp"

namespace safefollow::cli {

/// Malformed config text. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the flat `key = value` scenario format:
///
///   # comment
///   scenario = straight_backward
///   d_min = 3.0
///   follower_start = 0, 0, 0
///   waypoints = 0,0,0; 10,0,0; 10,10,0
///
/// Keys left out take the ScenarioConfig defaults. Unknown or repeated keys
/// are a ParseError; a parsed config that violates an invariant throws
/// ValidationError.
ScenarioConfig parse_config(std::string_view text);

/// Reads and parses a config file. A missing or unreadable file is reported
/// as std::runtime_error naming the path.
ScenarioConfig load_config(const std::string& path);

/// The fully resolved config as a flat JSON object keyed like the config
/// file. Non-finite values (e.g. an open-ended t_stop) become null.
nlohmann::json config_to_json(const ScenarioConfig& cfg);

std::string_view scenario_name(TargetKind kind);

}  // namespace safefollow::cli
