#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "betfree/diag_optimizer.hpp"
#include "betfree/recursive_optimizer.hpp"
#include "test_support.hpp"

using namespace betfree;

namespace {

// Scripted inner optimizer: emits a fixed fraction and records the gradients
// it is fed, so the outer algebra can be checked in isolation.
class ScriptedInner : public Learner {
 public:
  explicit ScriptedInner(Vec fraction) : fraction_(std::move(fraction)) {}

  LearnerStep predict() const override { return {fraction_, rounds_ + 1}; }
  void update(const Vec& g) override {
    received.push_back(g);
    ++rounds_;
  }
  int dim() const override { return static_cast<int>(fraction_.size()); }
  int rounds() const override { return rounds_; }

  void set_fraction(Vec v) { fraction_ = std::move(v); }

  std::vector<Vec> received;

 private:
  Vec fraction_;
  int rounds_ = 0;
};

}  // namespace

TEST_CASE("hand trace: zero initial fraction") {
  auto inner = std::make_unique<ScriptedInner>(Vec::Zero(2));
  ScriptedInner* raw = inner.get();
  RecursiveOptimizer opt(std::move(inner), {1.0, 0.5});

  const Vec w1 = opt.predict().iterate;
  CHECK(w1.cwiseAbs().maxCoeff() == 0.0);

  Vec g(2);
  g << 0.6, 0.4;
  opt.update(g);
  CHECK(*opt.wealth() == doctest::Approx(1.0));
  REQUIRE(raw->received.size() == 1);
  CHECK(raw->received[0][0] == doctest::Approx(0.3));
  CHECK(raw->received[0][1] == doctest::Approx(0.2));
}

TEST_CASE("hand trace: one-dimensional bet") {
  auto inner = std::make_unique<ScriptedInner>(Vec::Constant(1, 0.5));
  ScriptedInner* raw = inner.get();
  RecursiveOptimizer opt(std::move(inner), {1.0, 1.0});  // unscaled inner gradients

  CHECK(opt.predict().iterate[0] == doctest::Approx(0.5));
  opt.update(Vec::Constant(1, 0.5));
  CHECK(*opt.wealth() == doctest::Approx(0.75));
  CHECK(raw->received[0][0] == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("predict scales the fraction by current wealth") {
  auto inner = std::make_unique<ScriptedInner>(Vec::Zero(2));
  ScriptedInner* raw = inner.get();
  RecursiveOptimizer opt(std::move(inner), {2.0, 0.5});
  Vec v(2);
  v << 0.25, -0.5;
  raw->set_fraction(v);
  const Vec w = opt.predict().iterate;
  CHECK(w[0] == doctest::Approx(0.5));
  CHECK(w[1] == doctest::Approx(-1.0));
}

TEST_CASE("zero gradient leaves wealth unchanged and feeds zero to the inner") {
  auto inner = std::make_unique<ScriptedInner>(Vec::Constant(2, 0.1));
  ScriptedInner* raw = inner.get();
  RecursiveOptimizer opt(std::move(inner), {1.0, 0.5});
  opt.update(Vec::Zero(2));
  CHECK(*opt.wealth() == 1.0);
  CHECK(raw->received[0].cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("contract violations") {
  SUBCASE("gradient with ||g||_1 > 1") {
    RecursiveOptimizer opt(std::make_unique<ScriptedInner>(Vec::Zero(2)), {1.0, 0.5});
    Vec g(2);
    g << 0.8, 0.4;
    CHECK_THROWS_AS(opt.update(g), ContractViolation);
  }
  SUBCASE("inner fraction with ||v||_inf > 1/2") {
    RecursiveOptimizer opt(std::make_unique<ScriptedInner>(Vec::Constant(1, 0.6)),
                           {1.0, 0.5});
    CHECK_THROWS_AS(opt.predict(), ContractViolation);
  }
}

TEST_CASE("inner prediction is cached within a round") {
  // The scripted fraction changes between the two predict calls; the cached
  // value must win until the next update.
  auto inner = std::make_unique<ScriptedInner>(Vec::Constant(1, 0.25));
  ScriptedInner* raw = inner.get();
  RecursiveOptimizer opt(std::move(inner), {1.0, 0.5});
  const double first = opt.predict().iterate[0];
  raw->set_fraction(Vec::Constant(1, -0.25));
  CHECK(opt.predict().iterate[0] == first);
  opt.update(Vec::Zero(1));
  CHECK(opt.predict().iterate[0] == doctest::Approx(-0.25));
}

TEST_CASE("fuzz: inner gradient bound, wealth product identity, halving floor") {
  SeededRng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + static_cast<int>(rng.uniform01() * 5);
    DiagOptimizer::Options inner_options;
    inner_options.epsilon = 1.0;
    auto opt = RecursiveOptimizer(
        std::make_unique<DiagOptimizer>(d, inner_options), {1.0, 0.5});

    double log_product = 0.0;
    for (int t = 0; t < 200; ++t) {
      const Vec g = betfree::testing::random_l1_gradient(rng, d);
      const Vec v = opt.predict().iterate / *opt.wealth();
      const double before = *opt.wealth();

      // ||z||_inf <= 2 ||g||_inf whenever ||g||_1 <= 1, ||v||_inf <= 1/2
      const double g_dot_v = g.dot(v);
      const Vec z = g / (1.0 - g_dot_v);
      CHECK(norm(z, Norm::Linf) <= 2.0 * norm(g, Norm::Linf) + 1e-12);

      opt.update(g);
      const double after = *opt.wealth();
      CHECK(after >= before / 2.0 - 1e-15);
      CHECK(after > 0.0);

      log_product += std::log1p(-g_dot_v);
      CHECK(after == doctest::Approx(std::exp(log_product)).epsilon(1e-10));
    }
  }
}
