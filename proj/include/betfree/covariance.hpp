#pragma once

#include "betfree/rng.hpp"
#include "betfree/types.hpp"

namespace betfree {

// Orthogonal basis Q plus eigenvalue spectrum of a covariance matrix
// Sigma = Q diag(lambda) Q^T. Factors built by make_covariance have strictly
// positive eigenvalues sorted descending; hand-built factors may carry zero
// eigenvalues (degenerate directions) for sampling.
struct CovarianceFactor {
  Mat orthogonal_basis;  // Q, columns orthonormal
  Vec eigenvalues;       // lambda_1 >= ... >= lambda_d

  int dim() const { return static_cast<int>(eigenvalues.size()); }
};

// Random covariance with exponentially decaying spectrum:
//   lambda_i = r^(i-1), r = condition_number^(-1/(dim-1)),
// so lambda_1 = 1 and lambda_d = 1/condition_number. Q is the orthogonal
// factor of a QR decomposition of a dim x dim standard-Gaussian matrix
// (entries drawn in column-major order), with the sign convention R_ii > 0
// so the factor is unique and reproducible.
CovarianceFactor make_covariance(int dim, double condition_number, SeededRng& rng);

// x = Q diag(sqrt(lambda)) z with z standard normal, so E[x x^T] = Sigma.
Vec sample_gaussian(const CovarianceFactor& cov, SeededRng& rng);

Mat reconstruct_sigma(const CovarianceFactor& cov);

// Checks the make_covariance invariants: orthonormal columns (1e-10),
// positive descending eigenvalues, condition number within relative 1e-9.
void validate_covariance(const CovarianceFactor& cov, double condition_number);

}  // namespace betfree
