#pragma once

#include <optional>
#include <vector>

#include "betfree/types.hpp"

namespace betfree {

// One round's output: the iterate w_t and the (1-based) round it belongs to.
struct LearnerStep {
  Vec iterate;
  int round = 1;
};

// Betting wealth bookkeeping: wealth = epsilon - sum_t g_t . w_t.
class WealthLedger {
 public:
  explicit WealthLedger(double epsilon);

  void record_payout(double g_dot_w);

  double epsilon() const { return epsilon_; }
  double wealth() const { return wealth_; }
  double cumulative_payout() const { return cumulative_payout_; }

 private:
  double epsilon_;
  double wealth_;
  double cumulative_payout_ = 0.0;
};

// Per-round gradient and payout history, enough to evaluate the regret
// against any fixed comparator after the fact.
class RegretLedger {
 public:
  void record(const Vec& g, const Vec& w);

  // R_T(comparator) = sum_t g_t . w_t - (sum_t g_t) . comparator
  double regret_at(const Vec& comparator) const;

  std::size_t rounds() const { return payouts_.size(); }
  const std::vector<Vec>& gradients() const { return gradients_; }
  const std::vector<double>& payouts() const { return payouts_; }

 private:
  std::vector<Vec> gradients_;
  std::vector<double> payouts_;
};

// The uniform online-learner contract. Two-phase protocol: predict() exposes
// the round's iterate without mutating state (idempotent between updates),
// update() consumes the revealed gradient and advances the round.
class Learner {
 public:
  virtual ~Learner() = default;

  virtual LearnerStep predict() const = 0;
  virtual void update(const Vec& g) = 0;

  virtual int dim() const = 0;
  virtual int rounds() const = 0;

  // Betting learners report their wealth; others return nullopt.
  virtual std::optional<double> wealth() const { return std::nullopt; }
};

// Norm-bound checks at contract boundaries tolerate rounding from upstream
// rescaling (e.g. g/g_max can re-measure a hair above 1).
inline constexpr double kNormSlack = 1e-12;

}  // namespace betfree
