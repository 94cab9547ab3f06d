#include "betfree/doubling_bettor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace betfree {

DoublingBettor::DoublingBettor(double epsilon, double a_init)
    : a_(a_init), a_init_(a_init), wealth_(epsilon) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("DoublingBettor: epsilon must be positive");
  }
  if (!(a_init > 0.0)) {
    throw std::invalid_argument("DoublingBettor: A must be positive");
  }
}

void DoublingBettor::step(double g) {
  if (!std::isfinite(g) || std::abs(g) > 1.0 + kNormSlack) {
    throw ContractViolation("doubling step: |g| > 1");
  }

  const double x = fraction_ * wealth_;
  wealth_ -= x * g;
  const double z = g / (1.0 - g * fraction_);
  z_sum_ += z;
  z_sq_sum_ += z * z;
  // Fixed regularizer strength within the epoch, eta = 1.
  fraction_ = std::clamp(-2.0 * z_sum_ / a_, -0.5, 0.5);

  z_epoch_ += g * g;
  // The triggering gradient is processed in the old epoch; only then restart.
  if (2.0 * z_epoch_ > a_) {
    a_ *= 2.0;
    ++epoch_;
    z_epoch_ = 0.0;
    z_sum_ = 0.0;
    z_sq_sum_ = 0.0;
    fraction_ = 0.0;
  }
  ++rounds_;
}

LearnerStep DoublingBettor::predict() const {
  Vec w(1);
  w[0] = predict_scalar();
  return {std::move(w), rounds_ + 1};
}

void DoublingBettor::update(const Vec& g) {
  if (g.size() != 1) {
    throw ContractViolation("doubling update: expected a 1-D gradient");
  }
  step(g[0]);
}

}  // namespace betfree
