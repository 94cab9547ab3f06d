#include "betfree/recursive_optimizer.hpp"

#include <stdexcept>

#include "betfree/vector_ops.hpp"

namespace betfree {

RecursiveOptimizer::RecursiveOptimizer(std::unique_ptr<Learner> inner)
    : RecursiveOptimizer(std::move(inner), Options{}) {}

RecursiveOptimizer::RecursiveOptimizer(std::unique_ptr<Learner> inner, Options options)
    : inner_(std::move(inner)),
      ledger_(options.epsilon),
      inner_gradient_scale_(options.inner_gradient_scale) {
  if (!inner_) {
    throw std::invalid_argument("RecursiveOptimizer: inner optimizer required");
  }
  if (!(inner_gradient_scale_ > 0.0)) {
    throw std::invalid_argument("RecursiveOptimizer: inner gradient scale must be positive");
  }
}

const Vec& RecursiveOptimizer::current_fraction() const {
  if (!cached_fraction_) {
    Vec v = inner_->predict().iterate;
    if (norm(v, Norm::Linf) > 0.5 + kNormSlack) {
      throw ContractViolation("inner optimizer emitted ||v||_inf > 1/2");
    }
    cached_fraction_ = std::move(v);
  }
  return *cached_fraction_;
}

LearnerStep RecursiveOptimizer::predict() const {
  return {ledger_.wealth() * current_fraction(), rounds_ + 1};
}

void RecursiveOptimizer::update(const Vec& g) {
  if (!is_finite(g)) {
    throw ContractViolation("recursive update: gradient not finite");
  }
  if (norm(g, Norm::L1) > 1.0 + kNormSlack) {
    throw ContractViolation("recursive update: ||g||_1 > 1");
  }

  const Vec& v = current_fraction();
  const double g_dot_v = g.dot(v);
  const double denominator = 1.0 - g_dot_v;
  if (!(denominator > 0.0)) {
    throw InvariantViolation("recursive update: 1 - g.v <= 0");
  }

  ledger_.record_payout(g_dot_v * ledger_.wealth());
  if (ledger_.wealth() < 1e-300) {
    throw InvariantViolation("recursive update: wealth underflowed to subnormal range");
  }

  inner_->update((inner_gradient_scale_ / denominator) * g);
  cached_fraction_.reset();
  ++rounds_;
}

}  // namespace betfree
