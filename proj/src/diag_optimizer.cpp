#include "betfree/diag_optimizer.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace betfree {

double ftrl_fraction(std::span<const double> z_history, double eta) {
  double z_sum = 0.0;
  double z_sq_sum = 0.0;
  for (double z : z_history) {
    z_sum += z;
    z_sq_sum += z * z;
  }
  return std::clamp(-2.0 * eta * z_sum / (5.0 + z_sq_sum), -0.5, 0.5);
}

DiagOptimizer::DiagOptimizer(int dim) : DiagOptimizer(dim, Options{}) {}

DiagOptimizer::DiagOptimizer(int dim, Options options)
    : dim_(dim),
      coordinate_epsilon_(options.split_epsilon ? options.epsilon / dim : options.epsilon),
      eta_(options.eta) {
  if (dim < 1) {
    throw std::invalid_argument("DiagOptimizer: dim must be >= 1");
  }
  if (!(options.epsilon > 0.0) || !(options.eta > 0.0)) {
    throw std::invalid_argument("DiagOptimizer: epsilon and eta must be positive");
  }
  wealth_.assign(dim_, coordinate_epsilon_);
  fraction_.assign(dim_, 0.0);
  accumulator_.assign(dim_, 5.0);
  z_sum_.assign(dim_, 0.0);
  traces_.assign(dim_, ReductionTrace{});
  if (options.clamp) {
    clamp_.emplace(dim_, *options.clamp);
  }
}

LearnerStep DiagOptimizer::predict() const {
  Vec w(dim_);
  for (int i = 0; i < dim_; ++i) {
    w[i] = std::clamp(fraction_[i] * wealth_[i], -0.5, 0.5);
  }
  return {std::move(w), rounds_ + 1};
}

void DiagOptimizer::update(const Vec& g) {
  if (g.size() != dim_) {
    throw ContractViolation("diag update: gradient dimension mismatch");
  }
  if (!is_finite(g)) {
    throw ContractViolation("diag update: gradient not finite");
  }
  for (int i = 0; i < dim_; ++i) {
    if (std::abs(g[i]) > 1.0 + kNormSlack) {
      throw ContractViolation("diag update: |g_i| > 1");
    }
  }

  for (int i = 0; i < dim_; ++i) {
    const double x = fraction_[i] * wealth_[i];
    const double w = std::clamp(x, -0.5, 0.5);
    const double g_tilde = (g[i] * (x - w) < 0.0) ? 0.0 : g[i];
    traces_[i] = ReductionTrace{x, w, g[i], g_tilde};

    wealth_[i] -= x * g_tilde;

    // |g~| <= 1 and |v| <= 1/2 keep the denominator at least 1/2.
    const double denominator = 1.0 - g_tilde * fraction_[i];
    assert(denominator >= 0.5 - 1e-12);
    const double z = g_tilde / denominator;
    accumulator_[i] += z * z;
    z_sum_[i] += z;

    double v_next = std::clamp(-2.0 * eta_ * z_sum_[i] / accumulator_[i], -0.5, 0.5);
    if (clamp_) {
      clamp_->observe(i, z, fraction_[i]);
      v_next = clamp_->apply(v_next, i);
    }
    fraction_[i] = v_next;
  }
  ++rounds_;
}

std::optional<double> DiagOptimizer::wealth() const {
  double total = 0.0;
  for (double w : wealth_) {
    total += w;
  }
  return total;
}

}  // namespace betfree
