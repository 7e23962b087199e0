#include "output.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "config.hpp"
#include "gtest/gtest.h"

namespace safefollow::cli {
namespace {

ScenarioConfig noisy_backward() {
  return parse_config(R"(
scenario = straight_backward
speed = 2.0
target_start = 3, 0, 0
t_start = 2
plant = lag
noise_std = 0.03
rng_seed = 11
sensing_latency = 0.015
duration = 12.345
)");
}

TEST(FormatRealTest, RoundTripsExactly) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> mag(-300.0, 300.0);
  for (int i = 0; i < 10000; ++i) {
    const double v = std::ldexp(mag(rng), static_cast<int>(mag(rng)) / 10);
    EXPECT_EQ(std::stod(format_real(v)), v);
  }
  EXPECT_EQ(format_real(0.01), "0.01");
  EXPECT_EQ(format_real(2.0), "2");
}

TEST(LogCsvTest, HeaderAndRowCount) {
  const auto cfg = noisy_backward();
  const auto log = run_scenario(cfg);
  std::stringstream ss;
  write_log_csv(ss, log);
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, kLogHeader);
  std::size_t rows = 0;
  while (std::getline(ss, line)) ++rows;
  EXPECT_EQ(rows, static_cast<std::size_t>(std::floor(cfg.duration / cfg.plant.dt)) + 1);
}

TEST(LogCsvTest, MetricsRecomputedFromCsvMatchJson) {
  const auto cfg = noisy_backward();
  const auto log = run_scenario(cfg);
  const auto json = metrics_to_json(summarize(log), cfg);

  std::stringstream ss;
  write_log_csv(ss, log);
  const SimLog reread{read_log_csv(ss), cfg};
  const auto m = summarize(reread);

  EXPECT_NEAR(m.lambda_mean, json["lambda_mean"].get<double>(), 1e-9);
  EXPECT_NEAR(m.lambda_min, json["lambda_min"].get<double>(), 1e-9);
  EXPECT_NEAR(m.h_min, json["h_min"].get<double>(), 1e-9);
  EXPECT_NEAR(m.steady_state_lambda, json["steady_state_lambda"].get<double>(), 1e-9);
  EXPECT_EQ(m.collision, json["collision"].get<bool>());
  ASSERT_TRUE(m.response_time.has_value());
  EXPECT_NEAR(*m.response_time, json["response_time"].get<double>(), 1e-9);
}

TEST(LogCsvTest, RejectsForeignFiles) {
  std::stringstream bad_header("time,x\n0,1\n");
  EXPECT_THROW(read_log_csv(bad_header), std::runtime_error);
  std::stringstream short_row(std::string(kLogHeader) + "\n0,1,2\n");
  EXPECT_THROW(read_log_csv(short_row), std::runtime_error);
}

TEST(MetricsJsonTest, CarriesMetricsAndConfig) {
  const auto cfg = parse_config("scenario = straight_forward\nspeed = 0");
  const auto j = metrics_to_json(summarize(run_scenario(cfg)), cfg);
  for (const char* key : {"lambda_mean", "lambda_min", "h_min", "collision",
                          "response_time", "steady_state_lambda", "scenario",
                          "alpha", "d_min", "rng_seed"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_TRUE(j["response_time"].is_null());
  EXPECT_TRUE(j.is_object());
  for (const auto& [key, value] : j.items()) {
    EXPECT_FALSE(value.is_object()) << key << " should be flat";
  }
}

TEST(SweepCsvTest, OneRowPerValue) {
  SweepRow row;
  row.value = 0.5;
  row.metrics.lambda_mean = 4.25;
  row.metrics.response_time = 0.12;
  const SweepRow rows[] = {row, row};
  std::stringstream ss;
  write_sweep_csv(ss, "alpha", rows);
  EXPECT_EQ(ss.str(),
            "alpha,lambda_mean,lambda_min,h_min,collision,response_time,steady_state_lambda\n"
            "0.5,4.25,0,0,0,0.12,0\n"
            "0.5,4.25,0,0,0,0.12,0\n");
}

}  // namespace
}  // namespace safefollow::cli
