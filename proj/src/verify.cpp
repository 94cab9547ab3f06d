#include "betfree/verify.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "betfree/rng.hpp"
#include "betfree/theory_oracle.hpp"

namespace betfree::verify {

double grid_sup_conjugate(double a, double b, double y, double step) {
  const long n = std::lround(100.0 / step);
  double best = -std::numeric_limits<double>::infinity();
  for (long k = 0; k <= n; ++k) {
    const double x = -50.0 + static_cast<double>(k) * step;
    best = std::max(best, y * x - a * std::exp(b * x));
  }
  return best;
}

double grid_min_balancelog(double A, double B, double C, double D, double step) {
  const long n = std::lround(0.5 / step);
  double best = std::numeric_limits<double>::infinity();
  for (long k = 1; k <= n; ++k) {
    const double x = static_cast<double>(k) * step;
    best = std::min(best, (A / x) * (std::log(B / x) - C) + D * x);
  }
  return best;
}

double grid_argmin_bet_objective(double z_sum, double quad_weight, double step) {
  const long n = std::lround(1.0 / step);
  double best_value = std::numeric_limits<double>::infinity();
  double best_v = 0.0;
  for (long k = 0; k <= n; ++k) {
    const double v = -0.5 + static_cast<double>(k) * step;
    const double value = z_sum * v + quad_weight * v * v;
    if (value < best_value) {
      best_value = value;
      best_v = v;
    }
  }
  return best_v;
}

double grid_argmin_ftrl(std::span<const double> z_history, double eta, double step) {
  double z_sum = 0.0;
  double z_sq_sum = 0.0;
  for (double z : z_history) {
    z_sum += z;
    z_sq_sum += z * z;
  }
  return grid_argmin_bet_objective(z_sum, (5.0 + z_sq_sum) / (4.0 * eta), step);
}

namespace {

struct Check {
  const char* name;
  int failures = 0;
  int trials = 0;
};

void report(std::ostream& log, const Check& c) {
  log << (c.failures == 0 ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.trials
      << " trials, " << c.failures << " failures)\n";
}

double uniform_in(SeededRng& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.uniform01();
}

}  // namespace

int run_property_suite(int trials, std::uint64_t seed, std::ostream& log) {
  SeededRng rng(seed);
  int total_failures = 0;

  {
    // Closed-form conjugate against the grid supremum. Parameter ranges keep
    // the maximizer (1/b) log(y/(ab)) inside the grid.
    Check c{"fenchel_conjugate_exp matches grid sup (tol 1e-3)"};
    for (c.trials = 0; c.trials < trials; ++c.trials) {
      const double a = uniform_in(rng, 0.2, 3.0);
      const double b = uniform_in(rng, 0.2, 3.0);
      const double y = uniform_in(rng, 0.05, 5.0);
      const double closed = fenchel_conjugate_exp(a, b, y);
      const double grid = grid_sup_conjugate(a, b, y);
      if (std::abs(closed - grid) > 1e-3) {
        ++c.failures;
      }
    }
    report(log, c);
    total_failures += c.failures;
  }

  {
    Check c{"balancelog_bound dominates grid min (tol 1e-9)"};
    for (c.trials = 0; c.trials < trials; ++c.trials) {
      const double A = uniform_in(rng, 0.1, 5.0);
      const double B = uniform_in(rng, 0.1, 5.0);
      const double C = uniform_in(rng, 0.0, 3.0);
      const double D = uniform_in(rng, 0.1, 10.0);
      if (grid_min_balancelog(A, B, C, D) > balancelog_bound(A, B, C, D) + 1e-9) {
        ++c.failures;
      }
    }
    report(log, c);
    total_failures += c.failures;
  }

  {
    Check c{"log(1-x) >= -x - x^2 for x <= 1/2"};
    const double step = 1e-4;
    const long n = std::lround(10.5 / step);
    for (long k = 0; k <= n; ++k) {
      const double x = -10.0 + static_cast<double>(k) * step;
      ++c.trials;
      if (std::log1p(-x) < -x - x * x - 1e-12) {
        ++c.failures;
      }
    }
    report(log, c);
    total_failures += c.failures;
  }

  {
    Check c{"theorem4_bound nondecreasing in each G_i"};
    for (c.trials = 0; c.trials < trials; ++c.trials) {
      const int d = 4;
      BoundInputs in;
      in.epsilon = uniform_in(rng, 0.1, 2.0);
      in.eta = uniform_in(rng, 0.25, 1.0);
      in.comparator = Vec(d);
      in.gradient_energy = Vec(d);
      for (int i = 0; i < d; ++i) {
        in.comparator[i] = uniform_in(rng, -0.5, 0.5);
        in.gradient_energy[i] = uniform_in(rng, 0.0, 100.0);
      }
      in.comparator_norm = norm(in.comparator, Norm::Linf);
      const double base = theorem4_bound(in);
      bool bad = false;
      for (int i = 0; i < d; ++i) {
        BoundInputs bumped = in;
        bumped.gradient_energy[i] += std::max(1e-3, 0.01 * in.gradient_energy[i]);
        if (theorem4_bound(bumped) < base - 1e-12) {
          bad = true;
        }
      }
      if (bad) {
        ++c.failures;
      }
    }
    report(log, c);
    total_failures += c.failures;
  }

  return total_failures;
}

}  // namespace betfree::verify
