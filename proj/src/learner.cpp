#include "betfree/learner.hpp"

#include <stdexcept>

namespace betfree {

WealthLedger::WealthLedger(double epsilon) : epsilon_(epsilon), wealth_(epsilon) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("WealthLedger: epsilon must be positive");
  }
}

void WealthLedger::record_payout(double g_dot_w) {
  cumulative_payout_ += g_dot_w;
  wealth_ -= g_dot_w;
}

void RegretLedger::record(const Vec& g, const Vec& w) {
  gradients_.push_back(g);
  payouts_.push_back(g.dot(w));
}

double RegretLedger::regret_at(const Vec& comparator) const {
  double payout_sum = 0.0;
  for (double p : payouts_) {
    payout_sum += p;
  }
  Vec gradient_sum = Vec::Zero(comparator.size());
  for (const Vec& g : gradients_) {
    if (g.size() != comparator.size()) {
      throw std::invalid_argument("regret_at: comparator dimension mismatch");
    }
    gradient_sum += g;
  }
  return payout_sum - gradient_sum.dot(comparator);
}

}  // namespace betfree
