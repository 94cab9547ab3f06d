#include "betfree/baselines.hpp"

#include <cmath>
#include <stdexcept>

#include "betfree/vector_ops.hpp"

namespace betfree {

AdagradLearner::AdagradLearner(int dim, double learning_rate, double epsilon_div)
    : iterate_(Vec::Zero(dim)),
      accumulator_(Vec::Zero(dim)),
      learning_rate_(learning_rate),
      epsilon_div_(epsilon_div) {
  if (dim < 1) {
    throw std::invalid_argument("AdagradLearner: dim must be >= 1");
  }
  if (!(learning_rate > 0.0) || !(epsilon_div > 0.0)) {
    throw std::invalid_argument("AdagradLearner: learning rate and guard must be positive");
  }
}

LearnerStep AdagradLearner::predict() const { return {iterate_, rounds_ + 1}; }

void AdagradLearner::update(const Vec& g) {
  if (g.size() != iterate_.size()) {
    throw ContractViolation("adagrad update: gradient dimension mismatch");
  }
  if (!is_finite(g)) {
    throw ContractViolation("adagrad update: gradient not finite");
  }
  accumulator_ += g.cwiseProduct(g);
  iterate_ -= learning_rate_ * (g.array() / (accumulator_.array().sqrt() + epsilon_div_)).matrix();
  ++rounds_;
}

FixedFractionBettor::FixedFractionBettor(Vec v_star, double epsilon, Norm fraction_norm)
    : v_star_(std::move(v_star)), fraction_norm_(fraction_norm), ledger_(epsilon) {
  if (norm(v_star_, fraction_norm_) > 0.5) {
    throw std::invalid_argument("FixedFractionBettor: ||v*|| must be at most 1/2");
  }
}

LearnerStep FixedFractionBettor::predict() const {
  return {ledger_.wealth() * v_star_, rounds_ + 1};
}

void FixedFractionBettor::update(const Vec& g) {
  if (norm(g, dual_norm(fraction_norm_)) > 1.0 + kNormSlack) {
    throw ContractViolation("fixed-fraction update: gradient dual norm > 1");
  }
  ledger_.record_payout(g.dot(v_star_) * ledger_.wealth());
  ++rounds_;
}

double fixed_fraction_run(const Vec& v_star, const std::vector<Vec>& gradients,
                          double epsilon) {
  double wealth = epsilon;
  for (const Vec& g : gradients) {
    wealth *= 1.0 - g.dot(v_star);
  }
  return wealth;
}

Vec optimal_fixed_fraction(const std::vector<Vec>& gradients, const Vec& direction) {
  double s = 0.0;
  double q = 0.0;
  for (const Vec& g : gradients) {
    const double p = g.dot(direction);
    s += p;
    q += p * p;
  }
  if (s == 0.0 && q == 0.0) {
    return Vec::Zero(direction.size());
  }
  return direction * (-s / (2.0 * std::abs(s) + 2.0 * q));
}

double fixed_fraction_wealth_lower_bound(const std::vector<Vec>& gradients,
                                         const Vec& direction, double epsilon) {
  double s = 0.0;
  double q = 0.0;
  for (const Vec& g : gradients) {
    const double p = g.dot(direction);
    s += p;
    q += p * p;
  }
  if (s == 0.0 && q == 0.0) {
    return epsilon;
  }
  return epsilon * std::exp(s * s / (4.0 * std::abs(s) + 4.0 * q));
}

}  // namespace betfree
