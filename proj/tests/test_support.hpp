#pragma once

#include <vector>

#include "betfree/rng.hpp"
#include "betfree/types.hpp"
#include "betfree/vector_ops.hpp"

namespace betfree::testing {

inline double uniform_in(SeededRng& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.uniform01();
}

// Random gradient with ||g||_1 <= scale (scale <= 1 satisfies the recursive
// optimizer's contract).
inline Vec random_l1_gradient(SeededRng& rng, int dim, double scale = 1.0) {
  Vec g(dim);
  for (int i = 0; i < dim; ++i) {
    g[i] = rng.standard_normal();
  }
  const double l1 = norm(g, Norm::L1);
  if (l1 == 0.0) {
    return g;
  }
  return g * (scale * rng.uniform01() / l1);
}

// Random gradient with every |g_i| <= 1 (diag optimizer's contract).
inline Vec random_linf_gradient(SeededRng& rng, int dim) {
  Vec g(dim);
  for (int i = 0; i < dim; ++i) {
    g[i] = 2.0 * rng.uniform01() - 1.0;
  }
  return g;
}

inline std::vector<double> comparator_grid(double step = 1.0 / 64.0) {
  std::vector<double> grid;
  for (double w = -0.5; w <= 0.5 + 1e-12; w += step) {
    grid.push_back(w);
  }
  return grid;
}

}  // namespace betfree::testing
