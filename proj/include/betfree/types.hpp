#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace betfree {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Thrown when a caller breaks a documented precondition, e.g. feeding a
// learner a gradient outside its declared norm bound. Learners fail fast
// instead of letting wealth go negative.
class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when internal state breaks a condition that is impossible under the
// preconditions (a bug), or when a run must abort (wealth underflow).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration (unknown optimizer name, invalid argument combinations).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_finite(const Vec& v) { return v.allFinite(); }

}  // namespace betfree
