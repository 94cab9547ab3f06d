#include "betfree/vector_ops.hpp"

namespace betfree {

double norm(const Vec& v, Norm which) {
  switch (which) {
    case Norm::L1:
      return v.lpNorm<1>();
    case Norm::L2:
      return v.norm();
    case Norm::Linf:
      return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
  }
  return 0.0;
}

Norm dual_norm(Norm which) {
  switch (which) {
    case Norm::L1:
      return Norm::Linf;
    case Norm::L2:
      return Norm::L2;
    case Norm::Linf:
      return Norm::L1;
  }
  return Norm::L2;
}

const char* norm_name(Norm which) {
  switch (which) {
    case Norm::L1:
      return "l1";
    case Norm::L2:
      return "l2";
    case Norm::Linf:
      return "linf";
  }
  return "?";
}

}  // namespace betfree
