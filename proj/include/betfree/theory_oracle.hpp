#pragma once

#include <vector>

#include "betfree/vector_ops.hpp"

namespace betfree {

// Quantities a closed-form regret bound is evaluated on, measured against a
// fixed comparator under the declared iterate norm. epsilon is the initial
// wealth entering the bound (for the diagonal bounds: per coordinate).
struct BoundInputs {
  double epsilon = 1.0;
  double eta = 0.5;
  Vec comparator;                 // the fixed point the regret is taken at
  double comparator_norm = 0.0;   // under the declared iterate norm
  Vec gradient_energy;            // G_i = sum_t g_{t,i}^2
  double directional_energy = 0.0;  // Z = sum_t (g_t . u)^2, u = comparator/norm
  double direction_sum = 0.0;       // X = -sum_t g_t . u
};

BoundInputs make_bound_inputs(const std::vector<Vec>& gradients, const Vec& comparator,
                              Norm iterate_norm, double epsilon, double eta);

// Streaming version for long runs: feeds gradients one by one and produces
// BoundInputs for the comparator fixed at construction.
class BoundAccumulator {
 public:
  BoundAccumulator(Vec comparator, Norm iterate_norm);

  void add(const Vec& g);
  BoundInputs inputs(double epsilon, double eta) const;

  double direction_sum() const { return direction_sum_; }

 private:
  Vec comparator_;
  double comparator_norm_;
  Vec direction_;  // comparator / comparator_norm (zero if comparator is 0)
  Vec gradient_energy_;
  double directional_energy_ = 0.0;
  double direction_sum_ = 0.0;
};

// Fenchel conjugate of f(x) = a exp(bx) at y >= 0:
//   f*(y) = (y/b) (log(y/(ab)) - 1), with f*(0) = 0 as the limit value.
double fenchel_conjugate_exp(double a, double b, double y);

// Upper bound on inf_{x in (0,1/2]} (A/x)(log(B/x) - C) + Dx:
//   2 max[ sqrt(A D max[log(B sqrt(D)/sqrt(A)) - C, 1]),
//          2A max[log(B sqrt(4A^2 + D)/sqrt(A)) - C, 1] ].
double balancelog_bound(double A, double B, double C, double D);

enum class Theorem3Case {
  kFullMatrix,  // X >= 2 G_T: the sqrt(sum (g.w)^2 log) bound applies
  kFallback,    // otherwise: epsilon + 2 ||w|| G_T
};

struct Theorem3Result {
  Theorem3Case branch;
  double bound;
};

// Closed-form regret bound for the recursive optimizer. G_T_value is the
// inner optimizer's direction-dependent regret coefficient, evaluated at
// comparator/||comparator||; the boundary X == 2 G_T takes the full-matrix
// branch.
Theorem3Result theorem3_bound(const BoundInputs& in, double G_T_value);

// Closed-form regret bound for the diagonal optimizer (first display):
//   d eps + 2 sum_i |w_i| max[ sqrt(S_i max[log(|w_i| (1+4G_i)^eta
//       sqrt(2/eta + G_i(1+2/eta)) / eps) - 1, 1]),
//     2 max[log(|w_i| (1+4G_i)^eta sqrt(4 + 5/(4 eta) + G_i(1+2/eta)) / eps) - 1, 1] ]
// with S_i = 5/(4 eta) + G_i (1 + 2/eta). Coordinates with w_i = 0
// contribute 0; logs of nonpositive arguments resolve through the max with 1.
double theorem4_bound(const BoundInputs& in);

// The direction-dependent coefficient G(x) from the normalized (second)
// display, with |w_i| replaced by 1/2 inside the logs; the full bound there
// is d eps + ||w||_inf G(w/||w||_inf). This is the executable G_T used for
// the theorem3 branch condition.
double theorem4_direction_G(const Vec& direction, const Vec& gradient_energy,
                            double eta, double epsilon);

double theorem4_bound_normalized(const BoundInputs& in);

// Wealth-regret duality: given Wealth_T >= f(-sum g_t . u) for
// f(x) = a exp(bx), the regret obeys R_T <= epsilon + f*(||comparator||).
bool duality_check(double wealth_T, double a, double b, double comparator_norm,
                   double epsilon, double empirical_regret);

}  // namespace betfree
