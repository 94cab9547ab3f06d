#pragma once

#include <optional>
#include <span>
#include <vector>

#include "betfree/learner.hpp"
#include "betfree/safeguards.hpp"

namespace betfree {

// FTRL betting fraction for the regularized objective
//   sum_t z_t v + v^2/(4 eta) (5 + sum_t z_t^2)  over v in [-1/2, 1/2]:
// the constrained argmin is clip(-2 eta sum_t z_t / (5 + sum_t z_t^2)).
double ftrl_fraction(std::span<const double> z_history, double eta);

// One coordinate's unconstrained-to-constrained reduction for one round:
// w = clip(x, -1/2, 1/2) and the surrogate gradient g~ that is zeroed when
// the raw gradient points away from the box.
struct ReductionTrace {
  double x = 0.0;        // unclipped iterate v * wealth
  double w = 0.0;        // clipped iterate
  double g = 0.0;        // raw gradient
  double g_tilde = 0.0;  // surrogate gradient, g or 0
};

// d independent 1-D coin-betting learners with FTRL betting fractions and
// the 1-D constrained reduction. Usable standalone under ||g_t||_inf <= 1,
// or as the inner optimizer of RecursiveOptimizer (whose 1/2-scaling of
// z_t establishes that bound).
//
// Note on indices: the assignment "v <- clip(...)" at the end of a round
// produces the fraction used in the NEXT round, consistent with the FTRL
// argmin over the history observed so far.
class DiagOptimizer : public Learner {
 public:
  struct Options {
    double epsilon = 1.0;
    double eta = 0.5;
    // Start each coordinate at epsilon/d. Disable for standalone experiments
    // where epsilon is meant per coordinate.
    bool split_epsilon = true;
    std::optional<InitFractionClamp::Config> clamp;
  };

  explicit DiagOptimizer(int dim);
  DiagOptimizer(int dim, Options options);

  LearnerStep predict() const override;
  void update(const Vec& g) override;
  int dim() const override { return dim_; }
  int rounds() const override { return rounds_; }

  // Total wealth across the d coordinate games.
  std::optional<double> wealth() const override;

  double coordinate_wealth(int i) const { return wealth_[i]; }
  double fraction(int i) const { return fraction_[i]; }
  double ftrl_accumulator(int i) const { return accumulator_[i]; }  // A_i
  double z_sum(int i) const { return z_sum_[i]; }
  double coordinate_epsilon() const { return coordinate_epsilon_; }
  double eta() const { return eta_; }

  // Per-coordinate reduction trace of the most recent update.
  const std::vector<ReductionTrace>& last_traces() const { return traces_; }

 private:
  int dim_;
  double coordinate_epsilon_;
  double eta_;
  int rounds_ = 0;
  std::vector<double> wealth_;
  std::vector<double> fraction_;     // v_i for the upcoming round
  std::vector<double> accumulator_;  // A_i = 5 + sum z^2
  std::vector<double> z_sum_;
  std::vector<ReductionTrace> traces_;
  std::optional<InitFractionClamp> clamp_;
};

}  // namespace betfree
