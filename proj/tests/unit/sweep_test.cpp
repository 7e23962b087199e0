#include "safefollow/sweep.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "safefollow/errors.hpp"

namespace safefollow {
namespace {

ScenarioConfig receding() {
  ScenarioConfig cfg;
  cfg.script.kind = TargetKind::kStraightForward;
  cfg.script.speed = 1.0;
  cfg.script.start = {10, 0, 0};
  cfg.duration = 30.0;
  return cfg;
}

void expect_same(const Metrics& a, const Metrics& b) {
  EXPECT_EQ(a.lambda_mean, b.lambda_mean);
  EXPECT_EQ(a.lambda_min, b.lambda_min);
  EXPECT_EQ(a.h_min, b.h_min);
  EXPECT_EQ(a.collision, b.collision);
  EXPECT_EQ(a.response_time, b.response_time);
  EXPECT_EQ(a.steady_state_lambda, b.steady_state_lambda);
}

TEST(AlphaSweepTest, OneRowPerAlphaInOrder) {
  const std::vector<double> alphas = {0.5, 0.8, 1, 1.3, 1.5, 1.8, 2};
  const auto rows = alpha_sweep(receding(), alphas);
  ASSERT_EQ(rows.size(), 7u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].value, alphas[i]);
    EXPECT_NEAR(rows[i].metrics.steady_state_lambda, 3.0 + 1.0 / alphas[i], 0.1);
  }
  EXPECT_NEAR(rows.front().metrics.steady_state_lambda, 5.0, 0.1);
  EXPECT_NEAR(rows.back().metrics.steady_state_lambda, 3.5, 0.1);
}

TEST(AlphaSweepTest, BaseAlphaMatchesPlainRun) {
  const auto base = receding();
  const double alpha[] = {base.filter.alpha};
  const auto rows = alpha_sweep(base, alpha);
  expect_same(rows.front().metrics, summarize(run_scenario(base)));
}

TEST(LatencySweepTest, RowsInOrderAndZeroMatchesPlainRun) {
  auto base = receding();
  base.script.kind = TargetKind::kStraightBackward;
  base.script.speed = 2.0;
  const std::vector<double> lat = {0.1, 0.0, 0.005, 0.015};
  const auto rows = latency_sweep(base, lat);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].value, lat[i]);
  expect_same(rows[1].metrics, summarize(run_scenario(base)));
  EXPECT_LT(rows[0].metrics.lambda_min, rows[1].metrics.lambda_min);
}

TEST(SweepTest, RejectsBadValues) {
  EXPECT_THROW(alpha_sweep(receding(), std::vector<double>{}), ValidationError);
  EXPECT_THROW(alpha_sweep(receding(), std::vector<double>{1.0, 0.0}), ValidationError);
  EXPECT_THROW(latency_sweep(receding(), std::vector<double>{-0.01}), ValidationError);
}

}  // namespace
}  // namespace safefollow
