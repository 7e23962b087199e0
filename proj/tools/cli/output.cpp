#include "output.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "config.hpp"

namespace safefollow::cli {
namespace {

void put_vec(std::ostream& os, const Vec3& v) {
  os << ',' << format_real(v.x) << ',' << format_real(v.y) << ','
     << format_real(v.z);
}

double parse_field(std::string_view s, std::size_t row) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error("log row " + std::to_string(row) +
                             ": bad number '" + std::string(s) + "'");
  }
  return out;
}

}  // namespace

std::string format_real(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void write_log_csv(std::ostream& os, const SimLog& log) {
  os << kLogHeader << '\n';
  for (const StepRecord& r : log.records) {
    os << format_real(r.t);
    put_vec(os, r.follower_pos);
    put_vec(os, r.target_pos);
    put_vec(os, r.u_des);
    put_vec(os, r.u_star);
    os << ',' << format_real(r.h) << ',' << format_real(r.lambda) << ','
       << (r.constraint_active ? 1 : 0) << '\n';
  }
}

std::vector<StepRecord> read_log_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kLogHeader) {
    throw std::runtime_error("log has an unexpected header");
  }
  std::vector<StepRecord> records;
  std::size_t row = 0;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      f.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (f.size() != 16) {
      throw std::runtime_error("log row " + std::to_string(row) +
                               ": expected 16 fields");
    }
    auto num = [&](std::size_t i) { return parse_field(f[i], row); };
    StepRecord r;
    r.t = num(0);
    r.follower_pos = {num(1), num(2), num(3)};
    r.target_pos = {num(4), num(5), num(6)};
    r.u_des = {num(7), num(8), num(9)};
    r.u_star = {num(10), num(11), num(12)};
    r.h = num(13);
    r.lambda = num(14);
    r.constraint_active = f[15] == "1";
    records.push_back(r);
  }
  return records;
}

nlohmann::json metrics_to_json(const Metrics& m, const ScenarioConfig& cfg) {
  nlohmann::json out = config_to_json(cfg);
  out["lambda_mean"] = m.lambda_mean;
  out["lambda_min"] = m.lambda_min;
  out["h_min"] = m.h_min;
  out["collision"] = m.collision;
  out["response_time"] = m.response_time ? nlohmann::json(*m.response_time)
                                         : nlohmann::json(nullptr);
  out["steady_state_lambda"] = m.steady_state_lambda;
  return out;
}

void write_sweep_csv(std::ostream& os, std::string_view column,
                     std::span<const SweepRow> rows) {
  os << column
     << ",lambda_mean,lambda_min,h_min,collision,response_time,"
        "steady_state_lambda\n";
  for (const SweepRow& row : rows) {
    const Metrics& m = row.metrics;
    os << format_real(row.value) << ',' << format_real(m.lambda_mean) << ','
       << format_real(m.lambda_min) << ',' << format_real(m.h_min) << ','
       << (m.collision ? 1 : 0) << ','
       << (m.response_time ? format_real(*m.response_time) : std::string())
       << ',' << format_real(m.steady_state_lambda) << '\n';
  }
}

}  // namespace safefollow::cli
