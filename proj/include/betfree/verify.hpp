#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>

namespace betfree::verify {

// Brute-force grid oracles. They evaluate the defining optimization problems
// directly and never call the closed forms they are used to check.

// sup_x y x - a exp(b x) over x in [-50, 50], fixed step (default 1e-4).
double grid_sup_conjugate(double a, double b, double y, double step = 1e-4);

// min over x in (0, 1/2] of (A/x)(log(B/x) - C) + D x, fixed step grid.
double grid_min_balancelog(double A, double B, double C, double D, double step = 1e-4);

// argmin over v in [-1/2, 1/2] of z_sum v + quad_weight v^2 on a fixed grid.
// quad_weight = (5 + sum z^2)/(4 eta) recovers the FTRL betting objective.
double grid_argmin_bet_objective(double z_sum, double quad_weight, double step = 1e-4);

double grid_argmin_ftrl(std::span<const double> z_history, double eta,
                        double step = 1e-4);

// Property suite over the closed-form bound evaluators: conjugate vs grid
// sup, balancelog domination of the grid min, the log(1-x) >= -x - x^2
// inequality, and monotonicity of the diagonal bound in each G_i. Prints one
// line per check; returns the number of failures.
int run_property_suite(int trials, std::uint64_t seed, std::ostream& log);

}  // namespace betfree::verify
