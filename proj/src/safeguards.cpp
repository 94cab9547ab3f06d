#include "betfree/safeguards.hpp"

#include <algorithm>
#include <stdexcept>

namespace betfree {

Vec GmaxTracker::normalize(const Vec& g) {
  g_max_ = std::max(g_max_, norm(g, Norm::L1));
  if (g_max_ == 0.0) {
    return g;  // nothing seen but zeros; no scale to divide by
  }
  return g / g_max_;
}

GmaxScaler::GmaxScaler(std::unique_ptr<Learner> inner) : inner_(std::move(inner)) {
  if (!inner_) {
    throw std::invalid_argument("GmaxScaler: inner learner required");
  }
}

LearnerStep GmaxScaler::predict() const { return inner_->predict(); }

void GmaxScaler::update(const Vec& g) {
  if (!is_finite(g)) {
    throw ContractViolation("gmax update: gradient not finite");
  }
  inner_->update(tracker_.normalize(g));
}

MomentumOffset::MomentumOffset(std::unique_ptr<Learner> inner, Norm gradient_norm)
    : inner_(std::move(inner)), gradient_norm_(gradient_norm) {
  if (!inner_) {
    throw std::invalid_argument("MomentumOffset: inner learner required");
  }
  weighted_sum_ = Vec::Zero(inner_->dim());
}

Vec MomentumOffset::offset() const {
  if (weight_total_ <= 0.0) {
    return Vec::Zero(weighted_sum_.size());
  }
  return weighted_sum_ / weight_total_;
}

LearnerStep MomentumOffset::predict() const {
  LearnerStep step = inner_->predict();
  step.iterate += offset();
  return step;
}

void MomentumOffset::update(const Vec& g) {
  // The average is over the inner learner's own iterates, weighted by the
  // squared dual norm of the raw gradients.
  const double weight = norm(g, gradient_norm_) * norm(g, gradient_norm_);
  weighted_sum_ += weight * inner_->predict().iterate;
  weight_total_ += weight;
  inner_->update(g);
}

InitFractionClamp::InitFractionClamp(int dim) : InitFractionClamp(dim, Config{}) {}

InitFractionClamp::InitFractionClamp(int dim, Config config)
    : config_(config), accumulators_(dim, 0.0) {
  if (dim < 1) {
    throw std::invalid_argument("InitFractionClamp: dim must be >= 1");
  }
  if (!(config.threshold > 0.0)) {
    throw std::invalid_argument("InitFractionClamp: threshold must be positive");
  }
}

void InitFractionClamp::observe(int coord, double z, double fraction) {
  const double s = config_.statistic == Statistic::InnerGradientSquares ? z : fraction;
  accumulators_[coord] += s * s;
}

double InitFractionClamp::apply(double v, int coord) const {
  if (!active(coord)) {
    return v;
  }
  return std::clamp(v, -config_.threshold, config_.threshold);
}

}  // namespace betfree
