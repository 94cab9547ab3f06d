#pragma once

#include <vector>

#include "betfree/learner.hpp"
#include "betfree/vector_ops.hpp"

namespace betfree {

// Diagonal Adagrad: w_i <- w_i - lr * g_i / (sqrt(sum g_i^2) + epsilon_div).
class AdagradLearner : public Learner {
 public:
  AdagradLearner(int dim, double learning_rate, double epsilon_div = 1e-8);

  LearnerStep predict() const override;
  void update(const Vec& g) override;
  int dim() const override { return static_cast<int>(iterate_.size()); }
  int rounds() const override { return rounds_; }

  const Vec& accumulator() const { return accumulator_; }
  double learning_rate() const { return learning_rate_; }

 private:
  Vec iterate_;
  Vec accumulator_;
  double learning_rate_;
  double epsilon_div_;
  int rounds_ = 0;
};

// Oracle bettor with a fixed betting fraction: w_t = v* Wealth_{t-1}.
class FixedFractionBettor : public Learner {
 public:
  FixedFractionBettor(Vec v_star, double epsilon, Norm fraction_norm = Norm::L2);

  LearnerStep predict() const override;
  void update(const Vec& g) override;
  int dim() const override { return static_cast<int>(v_star_.size()); }
  int rounds() const override { return rounds_; }
  std::optional<double> wealth() const override { return ledger_.wealth(); }

 private:
  Vec v_star_;
  Norm fraction_norm_;
  WealthLedger ledger_;
  int rounds_ = 0;
};

// Closed-form final wealth of the fixed-fraction bettor:
//   epsilon * prod_t (1 - g_t . v_star).
double fixed_fraction_run(const Vec& v_star, const std::vector<Vec>& gradients,
                          double epsilon);

// The oracle-tuned fraction for a known gradient sequence and direction u
// (unit norm): v* = -u * S / (2|S| + 2Q) with S = sum g_t . u and
// Q = sum (g_t . u)^2.
Vec optimal_fixed_fraction(const std::vector<Vec>& gradients, const Vec& direction);

// Wealth guaranteed by the oracle-tuned fraction:
//   epsilon * exp(S^2 / (4|S| + 4Q)).
double fixed_fraction_wealth_lower_bound(const std::vector<Vec>& gradients,
                                         const Vec& direction, double epsilon);

}  // namespace betfree
