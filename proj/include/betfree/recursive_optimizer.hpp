#pragma once

#include <memory>
#include <optional>

#include "betfree/learner.hpp"

namespace betfree {

// The outer coin-betting learner: w_t = Wealth_{t-1} v_t where v_t is the
// inner optimizer's prediction over betting fractions. The inner must keep
// ||v_t||_inf <= 1/2 (checked every round, never clipped) and receives
// inner_gradient_scale * z_t with z_t = g_t / (1 - g_t . v_t), so with the
// default scale 1/2 it sees gradients bounded by 1 in the infinity norm.
// Outer gradients must satisfy ||g_t||_1 <= 1.
class RecursiveOptimizer : public Learner {
 public:
  struct Options {
    double epsilon = 1.0;
    double inner_gradient_scale = 0.5;
  };

  explicit RecursiveOptimizer(std::unique_ptr<Learner> inner);
  RecursiveOptimizer(std::unique_ptr<Learner> inner, Options options);

  LearnerStep predict() const override;
  void update(const Vec& g) override;
  int dim() const override { return inner_->dim(); }
  int rounds() const override { return rounds_; }
  std::optional<double> wealth() const override { return ledger_.wealth(); }

  const WealthLedger& ledger() const { return ledger_; }
  double inner_gradient_scale() const { return inner_gradient_scale_; }
  const Learner& inner() const { return *inner_; }

 private:
  // The inner's v is requested once per round and cached so predict() is
  // idempotent between updates.
  const Vec& current_fraction() const;

  std::unique_ptr<Learner> inner_;
  WealthLedger ledger_;
  double inner_gradient_scale_;
  int rounds_ = 0;
  mutable std::optional<Vec> cached_fraction_;
};

}  // namespace betfree
