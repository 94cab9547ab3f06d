#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "betfree/diag_optimizer.hpp"
#include "betfree/verify.hpp"
#include "test_support.hpp"

using namespace betfree;

TEST_CASE("exact rational hand trace, d=1, eta=1/2, unit gradients") {
  DiagOptimizer::Options options;
  options.epsilon = 1.0;
  options.eta = 0.5;
  DiagOptimizer opt(1, options);

  // Round 1: x = 0, wealth stays 1, z = 1, A = 6, v <- -1/6.
  CHECK(opt.predict().iterate[0] == 0.0);
  opt.update(Vec::Constant(1, 1.0));
  CHECK(opt.coordinate_wealth(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(opt.ftrl_accumulator(0) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(opt.fraction(0) == doctest::Approx(-1.0 / 6.0).epsilon(1e-12));

  // Round 2: x = w = -1/6, wealth = 7/6, z = 6/7, v <- -91/330.
  CHECK(opt.predict().iterate[0] == doctest::Approx(-1.0 / 6.0).epsilon(1e-12));
  opt.update(Vec::Constant(1, 1.0));
  CHECK(opt.coordinate_wealth(0) == doctest::Approx(7.0 / 6.0).epsilon(1e-12));
  CHECK(opt.fraction(0) == doctest::Approx(-91.0 / 330.0).epsilon(1e-12));
}

TEST_CASE("predict clips the unconstrained iterate") {
  DiagOptimizer::Options options;
  options.epsilon = 1.0;
  DiagOptimizer opt(1, options);
  // Pump wealth with favorable outcomes until x = v * wealth leaves the box.
  int pumped = 0;
  while (opt.last_traces()[0].x <= 0.5 && pumped < 200) {
    opt.update(Vec::Constant(1, -1.0));
    ++pumped;
  }
  REQUIRE(opt.last_traces()[0].x > 0.5);  // reached within the round budget
  CHECK(opt.predict().iterate[0] == 0.5);
}

TEST_CASE("reduction zeroes gradients pointing away from the box") {
  DiagOptimizer::Options options;
  options.epsilon = 1.0;
  DiagOptimizer opt(1, options);
  for (int t = 0; t < 60; ++t) {
    opt.update(Vec::Constant(1, -1.0));
  }
  const double x = opt.fraction(0) * opt.coordinate_wealth(0);
  REQUIRE(x > 0.5);
  const double wealth_before = opt.coordinate_wealth(0);
  const double a_before = opt.ftrl_accumulator(0);
  opt.update(Vec::Constant(1, -1.0));  // g (x - w) < 0
  const ReductionTrace& trace = opt.last_traces()[0];
  CHECK(trace.g_tilde == 0.0);
  CHECK(trace.w == 0.5);
  CHECK(opt.coordinate_wealth(0) == wealth_before);
  CHECK(opt.ftrl_accumulator(0) == a_before);  // z = 0
}

TEST_CASE("zero gradient leaves every coordinate unchanged") {
  DiagOptimizer::Options options;
  DiagOptimizer opt(3, options);
  opt.update(Vec::Constant(3, 0.5));
  const std::array<double, 3> wealth = {opt.coordinate_wealth(0), opt.coordinate_wealth(1),
                                        opt.coordinate_wealth(2)};
  const std::array<double, 3> fraction = {opt.fraction(0), opt.fraction(1),
                                          opt.fraction(2)};
  const int rounds = opt.rounds();
  opt.update(Vec::Zero(3));
  for (int i = 0; i < 3; ++i) {
    CHECK(opt.coordinate_wealth(i) == wealth[static_cast<std::size_t>(i)]);
    CHECK(opt.fraction(i) == fraction[static_cast<std::size_t>(i)]);
  }
  CHECK(opt.rounds() == rounds + 1);
}

TEST_CASE("coordinate gradient above 1 is a contract violation") {
  DiagOptimizer opt(2);
  Vec g(2);
  g << 0.5, 1.5;
  CHECK_THROWS_AS(opt.update(g), ContractViolation);
}

TEST_CASE("epsilon splitting across coordinates") {
  DiagOptimizer::Options split;
  split.epsilon = 1.0;
  DiagOptimizer with_split(4, split);
  CHECK(with_split.coordinate_epsilon() == doctest::Approx(0.25));
  CHECK(*with_split.wealth() == doctest::Approx(1.0));

  DiagOptimizer::Options standalone;
  standalone.epsilon = 1.0;
  standalone.split_epsilon = false;
  DiagOptimizer no_split(4, standalone);
  CHECK(no_split.coordinate_epsilon() == doctest::Approx(1.0));
}

TEST_CASE("ftrl_fraction closed form") {
  CHECK(ftrl_fraction({}, 0.5) == 0.0);

  const std::array<double, 1> one{1.0};
  CHECK(ftrl_fraction(one, 0.5) == doctest::Approx(-1.0 / 6.0).epsilon(1e-12));

  std::vector<double> twos(100, 2.0);
  CHECK(ftrl_fraction(twos, 0.5) == doctest::Approx(-200.0 / 405.0).epsilon(1e-12));
}

TEST_CASE("ftrl_fraction matches the grid argmin on random histories") {
  SeededRng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int len = 1 + static_cast<int>(rng.uniform01() * 200);
    std::vector<double> z(len);
    for (double& zi : z) {
      zi = 4.0 * rng.uniform01() - 2.0;
    }
    const double eta = 0.1 + rng.uniform01();
    const double closed = ftrl_fraction(z, eta);
    const double grid = verify::grid_argmin_ftrl(z, eta);
    CHECK(std::abs(closed - grid) <= 1e-4 + 1e-12);
  }
}

TEST_CASE("reduction inequality against the comparator grid") {
  SeededRng rng(47);
  const std::vector<double> grid = betfree::testing::comparator_grid();
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + static_cast<int>(rng.uniform01() * 3);
    DiagOptimizer opt(d);
    for (int t = 0; t < 100; ++t) {
      opt.update(betfree::testing::random_linf_gradient(rng, d));
      for (const ReductionTrace& trace : opt.last_traces()) {
        for (double comparator : grid) {
          CHECK(trace.g * (trace.w - comparator) <=
                trace.g_tilde * (trace.x - comparator) + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("log-sum bound on fuzzed z trajectories") {
  SeededRng rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const int len = 1 + static_cast<int>(rng.uniform01() * 300);
    double prefix = 0.0;
    double lhs = 0.0;
    for (int t = 0; t < len; ++t) {
      const double z = 4.0 * rng.uniform01() - 2.0;
      lhs += z * z / (5.0 + prefix);
      prefix += z * z;
    }
    CHECK(lhs <= std::log1p(prefix) + 1e-12);
  }
}

TEST_CASE("per-coordinate wealth keeps the 2^-t floor") {
  SeededRng rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2;
    DiagOptimizer opt(d);
    const double eps = opt.coordinate_epsilon();
    double floor = eps;
    for (int t = 1; t <= 60; ++t) {
      opt.update(betfree::testing::random_linf_gradient(rng, d));
      floor /= 2.0;
      for (int i = 0; i < d; ++i) {
        CHECK(opt.coordinate_wealth(i) > 0.0);
        CHECK(opt.coordinate_wealth(i) >= floor - 1e-300);
      }
    }
  }
}

TEST_CASE("accumulator identity A = 5 + sum z^2") {
  SeededRng rng(61);
  DiagOptimizer opt(2);
  std::vector<double> z_history0;
  for (int t = 0; t < 80; ++t) {
    const double v_before = opt.fraction(0);
    const double wealth_before = opt.coordinate_wealth(0);
    const Vec g = betfree::testing::random_linf_gradient(rng, 2);
    opt.update(g);
    const double x = v_before * wealth_before;
    const double w = std::clamp(x, -0.5, 0.5);
    const double g_tilde = (g[0] * (x - w) < 0.0) ? 0.0 : g[0];
    z_history0.push_back(g_tilde / (1.0 - g_tilde * v_before));
    double sum_sq = 0.0;
    for (double z : z_history0) {
      sum_sq += z * z;
    }
    CHECK(opt.ftrl_accumulator(0) == doctest::Approx(5.0 + sum_sq).epsilon(1e-10));
    CHECK(opt.last_traces()[0].g_tilde == doctest::Approx(g_tilde));
  }
}
