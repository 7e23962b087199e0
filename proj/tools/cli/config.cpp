#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "safefollow/errors.hpp"

namespace safefollow::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const auto pos = s.find(sep, begin);
    parts.push_back(trim(s.substr(begin, pos - begin)));
    if (pos == std::string_view::npos) break;
    begin = pos + 1;
  }
  return parts;
}

class LineParser {
 public:
  LineParser(std::size_t line, std::string_view key)
      : line_(line), key_(key) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, std::string(key_) + ": " + what);
  }

  double real(std::string_view v) const {
    double out = 0.0;
    const auto* end = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (v.empty() || ec != std::errc() || ptr != end)
      fail("expected a number, got '" + std::string(v) + "'");
    return out;
  }

  std::uint64_t unsigned64(std::string_view v) const {
    std::uint64_t out = 0;
    const auto* end = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (v.empty() || ec != std::errc() || ptr != end)
      fail("expected an unsigned integer, got '" + std::string(v) + "'");
    return out;
  }

  bool boolean(std::string_view v) const {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    fail("expected true/false, got '" + std::string(v) + "'");
  }

  Vec3 vec3(std::string_view v) const {
    const auto parts = split(v, ',');
    if (parts.size() != 3) fail("expected x,y,z, got '" + std::string(v) + "'");
    return {real(parts[0]), real(parts[1]), real(parts[2])};
  }

  std::vector<Vec3> vec3_list(std::string_view v) const {
    std::vector<Vec3> out;
    if (v.empty()) return out;
    for (std::string_view triple : split(v, ';')) {
      if (triple.empty()) continue;  // tolerate a trailing ';'
      out.push_back(vec3(triple));
    }
    return out;
  }

 private:
  std::size_t line_;
  std::string_view key_;
};

const std::set<std::string_view, std::less<>> kKnownKeys = {
    "scenario",  "waypoints",       "speed",          "d_min",
    "alpha",     "v_max",           "mode",           "clamp_desired",
    "plant",     "tau",             "dt",             "duration",
    "follower_start", "target_start", "sensing_latency", "noise_std",
    "rng_seed",  "collision_radius", "t_start",       "t_stop",
};

nlohmann::json vec_json(const Vec3& v) { return {v.x, v.y, v.z}; }

nlohmann::json real_json(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

std::string_view scenario_name(TargetKind kind) {
  switch (kind) {
    case TargetKind::kStraightForward: return "straight_forward";
    case TargetKind::kStraightBackward: return "straight_backward";
    case TargetKind::kMultiTurn: return "multi_turn";
    case TargetKind::kFromFile: return "from_file";
  }
  return "unknown";
}

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig cfg;
  std::map<std::string, std::string_view, std::less<>> seen;
  bool have_waypoints = false;

  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const auto eol = text.find('\n', begin);
    std::string_view line = text.substr(begin, eol - begin);
    begin = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, "expected 'key = value', got '" +
                                    std::string(line) + "'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const LineParser p(line_no, key);

    if (!kKnownKeys.contains(key)) p.fail("unknown key");
    if (seen.contains(key)) p.fail("key given more than once");
    seen.emplace(std::string(key), value);

    if (key == "scenario") {
      if (value == "straight_forward") cfg.script.kind = TargetKind::kStraightForward;
      else if (value == "straight_backward") cfg.script.kind = TargetKind::kStraightBackward;
      else if (value == "multi_turn") cfg.script.kind = TargetKind::kMultiTurn;
      else if (value == "from_file") cfg.script.kind = TargetKind::kFromFile;
      else p.fail("unknown scenario '" + std::string(value) + "'");
    } else if (key == "waypoints") {
      cfg.script.waypoints = p.vec3_list(value);
      have_waypoints = true;
    } else if (key == "speed") {
      cfg.script.speed = p.real(value);
    } else if (key == "d_min") {
      cfg.filter.d_min = p.real(value);
    } else if (key == "alpha") {
      cfg.filter.alpha = p.real(value);
    } else if (key == "v_max") {
      cfg.filter.v_max = p.real(value);
    } else if (key == "mode") {
      if (value == "basic") cfg.filter.mode = FilterMode::kPaperBasic;
      else if (value == "target_aware") cfg.filter.mode = FilterMode::kTargetAware;
      else p.fail("expected basic or target_aware");
    } else if (key == "clamp_desired") {
      cfg.filter.clamp_desired = p.boolean(value);
    } else if (key == "plant") {
      if (value == "ideal") cfg.plant.model = PlantModel::kIdeal;
      else if (value == "lag") cfg.plant.model = PlantModel::kFirstOrderLag;
      else p.fail("expected ideal or lag");
    } else if (key == "tau") {
      cfg.plant.tau = p.real(value);
    } else if (key == "dt") {
      cfg.plant.dt = p.real(value);
    } else if (key == "duration") {
      cfg.duration = p.real(value);
    } else if (key == "follower_start") {
      cfg.follower_start = p.vec3(value);
    } else if (key == "target_start") {
      cfg.script.start = p.vec3(value);
    } else if (key == "sensing_latency") {
      cfg.sensing_latency = p.real(value);
    } else if (key == "noise_std") {
      cfg.noise_std = p.real(value);
    } else if (key == "rng_seed") {
      cfg.rng_seed = p.unsigned64(value);
    } else if (key == "collision_radius") {
      cfg.collision_radius = p.real(value);
    } else if (key == "t_start") {
      cfg.script.t_start = p.real(value);
    } else if (key == "t_stop") {
      cfg.script.t_stop = p.real(value);
    }
  }

  if (cfg.script.kind == TargetKind::kMultiTurn) {
    if (!have_waypoints) cfg.script.waypoints = default_multi_turn_waypoints();
    if (!seen.contains("speed")) cfg.script.speed = default_multi_turn_script().speed;
  }
  if ((cfg.script.kind == TargetKind::kMultiTurn ||
       cfg.script.kind == TargetKind::kFromFile) &&
      !cfg.script.waypoints.empty() && !seen.contains("target_start")) {
    cfg.script.start = cfg.script.waypoints.front();
  }

  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

nlohmann::json config_to_json(const ScenarioConfig& cfg) {
  nlohmann::json waypoints = nlohmann::json::array();
  for (const Vec3& w : cfg.script.waypoints) waypoints.push_back(vec_json(w));

  return {
      {"scenario", scenario_name(cfg.script.kind)},
      {"waypoints", waypoints},
      {"speed", cfg.script.speed},
      {"target_start", vec_json(cfg.script.start)},
      {"t_start", real_json(cfg.script.t_start)},
      {"t_stop", real_json(cfg.script.t_stop)},
      {"d_min", cfg.filter.d_min},
      {"alpha", cfg.filter.alpha},
      {"v_max", cfg.filter.v_max},
      {"mode", cfg.filter.mode == FilterMode::kTargetAware ? "target_aware" : "basic"},
      {"clamp_desired", cfg.filter.clamp_desired},
      {"plant", cfg.plant.model == PlantModel::kFirstOrderLag ? "lag" : "ideal"},
      {"tau", cfg.plant.tau},
      {"dt", cfg.plant.dt},
      {"duration", cfg.duration},
      {"follower_start", vec_json(cfg.follower_start)},
      {"sensing_latency", cfg.sensing_latency},
      {"noise_std", cfg.noise_std},
      {"rng_seed", cfg.rng_seed},
      {"collision_radius", cfg.collision_radius},
  };
}

}  // namespace safefollow::cli
