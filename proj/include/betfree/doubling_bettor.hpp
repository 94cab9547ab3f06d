#pragma once

#include <optional>

#include "betfree/learner.hpp"

namespace betfree {

// 1-D unconstrained coin bettor with a fixed FTRL regularizer strength A per
// epoch (eta = 1) and doubling restarts: whenever the epoch's observed
// 2 * sum g_t^2 exceeds A, the bettor doubles A, zeroes its FTRL accumulators
// and betting fraction, and starts a new epoch. Wealth is carried across
// restarts; resetting it would discard earned wealth and break the
// telescoping of the per-epoch guarantees.
class DoublingBettor : public Learner {
 public:
  explicit DoublingBettor(double epsilon, double a_init = 5.0);

  // Scalar interface; the Learner overrides below wrap it with dim-1 vectors.
  double predict_scalar() const { return fraction_ * wealth_; }
  void step(double g);

  LearnerStep predict() const override;
  void update(const Vec& g) override;
  int dim() const override { return 1; }
  int rounds() const override { return rounds_; }
  std::optional<double> wealth() const override { return wealth_; }

  double regularizer() const { return a_; }  // current epoch's fixed A
  int epoch() const { return epoch_; }
  double epoch_energy() const { return z_epoch_; }  // sum g^2 this epoch
  double fraction() const { return fraction_; }
  double z_sum() const { return z_sum_; }
  double z_sq_sum() const { return z_sq_sum_; }

 private:
  double a_;
  double a_init_;
  int epoch_ = 1;
  double z_epoch_ = 0.0;  // Z: running sum of g^2 within the epoch
  double z_sum_ = 0.0;
  double z_sq_sum_ = 0.0;
  double wealth_;
  double fraction_ = 0.0;
  int rounds_ = 0;
};

}  // namespace betfree
