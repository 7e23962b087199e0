#include "safefollow/metrics.hpp"

#include "gtest/gtest.h"
#include "safefollow/errors.hpp"

namespace safefollow {
namespace {

SimLog log_with_lambdas(std::initializer_list<double> lambdas, double d_min = 3.0) {
  SimLog log;
  log.config.filter.d_min = d_min;
  log.config.script.speed = 0.0;
  double t = 0.0;
  for (double l : lambdas) {
    StepRecord r;
    r.t = t;
    r.target_pos = {l, 0, 0};
    r.lambda = l;
    r.h = l - d_min;
    log.records.push_back(r);
    t += log.config.plant.dt;
  }
  return log;
}

TEST(SummarizeTest, MeanAndMinimum) {
  const auto m = summarize(log_with_lambdas({3, 4, 5}));
  EXPECT_DOUBLE_EQ(m.lambda_mean, 4.0);
  EXPECT_DOUBLE_EQ(m.lambda_min, 3.0);
  EXPECT_DOUBLE_EQ(m.h_min, 0.0);
  EXPECT_FALSE(m.response_time.has_value());
}

TEST(SummarizeTest, AllOnBoundary) {
  const auto m = summarize(log_with_lambdas({3, 3, 3, 3}));
  EXPECT_DOUBLE_EQ(m.lambda_mean, 3.0);
  EXPECT_DOUBLE_EQ(m.lambda_min, 3.0);
  EXPECT_FALSE(m.collision);
}

TEST(SummarizeTest, CollisionThreshold) {
  auto log = log_with_lambdas({4, 0.3, 4});
  log.config.collision_radius = 0.5;
  EXPECT_TRUE(summarize(log).collision);
  log = log_with_lambdas({4, 0.5, 4});
  EXPECT_TRUE(summarize(log).collision);
  log = log_with_lambdas({4, 0.51, 4});
  EXPECT_FALSE(summarize(log).collision);
}

TEST(SummarizeTest, SteadyStateUsesFinalFifth) {
  const auto m = summarize(log_with_lambdas({9, 9, 9, 9, 9, 9, 9, 9, 1, 3}));
  EXPECT_DOUBLE_EQ(m.steady_state_lambda, 2.0);
  EXPECT_DOUBLE_EQ(summarize(log_with_lambdas({7})).steady_state_lambda, 7.0);
}

TEST(SummarizeTest, EmptyLogThrows) {
  EXPECT_THROW(summarize(SimLog{}), EmptyLog);
}

TEST(SummarizeTest, ResponseTimeFromRealizedMotion) {
  SimLog log;
  log.config.plant.dt = 0.1;
  log.config.script.speed = 2.0;
  log.config.script.t_start = 0.5;
  // Follower moves 0.1 m/s until t = 0.7, then 0.5 m/s.
  double x = 0.0;
  for (int k = 0; k <= 12; ++k) {
    StepRecord r;
    r.t = k * 0.1;
    r.follower_pos = {x, 0, 0};
    r.target_pos = {10, 0, 0};
    r.lambda = 10 - x;
    log.records.push_back(r);
    x += (k < 7 ? 0.01 : 0.05);
  }
  const auto m = summarize(log);
  ASSERT_TRUE(m.response_time.has_value());
  EXPECT_NEAR(*m.response_time, 0.3, 1e-12);
}

}  // namespace
}  // namespace safefollow
