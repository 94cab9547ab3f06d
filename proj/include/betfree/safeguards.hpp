#pragma once

#include <memory>
#include <vector>

#include "betfree/learner.hpp"
#include "betfree/vector_ops.hpp"

namespace betfree {

// Running maximum of ||g||_1 with rescaling, shared by the GmaxScaler wrapper
// and the biased-gradient stream generator.
class GmaxTracker {
 public:
  // Updates g_max and returns g / g_max. While g_max is still zero (only
  // all-zero gradients seen) the gradient is returned unchanged.
  Vec normalize(const Vec& g);

  double g_max() const { return g_max_; }

 private:
  double g_max_ = 0.0;
};

// Feeds the wrapped learner g_t / g_max so its gradients satisfy
// ||.||_1 <= 1 without a known a-priori bound on the raw gradients.
class GmaxScaler : public Learner {
 public:
  explicit GmaxScaler(std::unique_ptr<Learner> inner);

  LearnerStep predict() const override;
  void update(const Vec& g) override;
  int dim() const override { return inner_->dim(); }
  int rounds() const override { return inner_->rounds(); }
  std::optional<double> wealth() const override { return inner_->wealth(); }

  double g_max() const { return tracker_.g_max(); }
  const Learner& inner() const { return *inner_; }

 private:
  std::unique_ptr<Learner> inner_;
  GmaxTracker tracker_;
};

// Momentum-style offset: reported iterates are w_t + wbar_t where wbar_t is
// the gradient-norm-weighted average of the inner learner's past iterates,
//   wbar_t = sum_{t'<=t} ||g_t'||*^2 w_t' / sum_{t'<=t} ||g_t'||*^2,
// accumulated as gradients arrive (so round t's prediction averages rounds
// 1..t-1, and the average is 0 before any gradient).
class MomentumOffset : public Learner {
 public:
  explicit MomentumOffset(std::unique_ptr<Learner> inner, Norm gradient_norm = Norm::L1);

  LearnerStep predict() const override;
  void update(const Vec& g) override;
  int dim() const override { return inner_->dim(); }
  int rounds() const override { return inner_->rounds(); }
  std::optional<double> wealth() const override { return inner_->wealth(); }

  Vec offset() const;
  const Learner& inner() const { return *inner_; }

 private:
  std::unique_ptr<Learner> inner_;
  Norm gradient_norm_;
  Vec weighted_sum_;
  double weight_total_ = 0.0;
};

// Keeps a coordinate's betting fraction inside [-threshold, threshold] until
// that coordinate's activation statistic reaches 1, then retires for good.
// The statistic is the sum of squared inner gradients z_{t,i}^2 by default;
// the sum of squared betting fractions is selectable as the alternative
// reading of the heuristic.
class InitFractionClamp {
 public:
  enum class Statistic { InnerGradientSquares, FractionSquares };

  struct Config {
    double threshold = 0.1;
    Statistic statistic = Statistic::InnerGradientSquares;
  };

  explicit InitFractionClamp(int dim);
  InitFractionClamp(int dim, Config config);

  // Feed the round's per-coordinate z and betting fraction.
  void observe(int coord, double z, double fraction);

  // clip(v, -threshold, threshold) while the coordinate is active.
  double apply(double v, int coord) const;

  bool active(int coord) const { return accumulators_[coord] < 1.0; }
  double accumulator(int coord) const { return accumulators_[coord]; }
  double threshold() const { return config_.threshold; }

 private:
  Config config_;
  std::vector<double> accumulators_;
};

}  // namespace betfree
