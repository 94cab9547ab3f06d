#include "betfree/covariance.hpp"

#include <cmath>
#include <stdexcept>

namespace betfree {

CovarianceFactor make_covariance(int dim, double condition_number, SeededRng& rng) {
  if (dim < 2) {
    throw std::invalid_argument("make_covariance: dim must be >= 2");
  }
  if (!(condition_number >= 1.0)) {
    throw std::invalid_argument("make_covariance: condition number must be >= 1");
  }

  Mat gaussian(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      gaussian(i, j) = rng.standard_normal();
    }
  }

  Eigen::HouseholderQR<Mat> qr(gaussian);
  Mat q = qr.householderQ() * Mat::Identity(dim, dim);
  const Mat& qr_packed = qr.matrixQR();
  for (int i = 0; i < dim; ++i) {
    if (qr_packed(i, i) < 0.0) {
      q.col(i) = -q.col(i);
    }
  }

  const double ratio = std::pow(condition_number, -1.0 / (dim - 1));
  Vec eigenvalues(dim);
  for (int i = 0; i < dim; ++i) {
    eigenvalues[i] = std::pow(ratio, static_cast<double>(i));
  }

  return CovarianceFactor{std::move(q), std::move(eigenvalues)};
}

Vec sample_gaussian(const CovarianceFactor& cov, SeededRng& rng) {
  const int d = cov.dim();
  Vec scaled(d);
  for (int i = 0; i < d; ++i) {
    scaled[i] = std::sqrt(cov.eigenvalues[i]) * rng.standard_normal();
  }
  return cov.orthogonal_basis * scaled;
}

Mat reconstruct_sigma(const CovarianceFactor& cov) {
  return cov.orthogonal_basis * cov.eigenvalues.asDiagonal() *
         cov.orthogonal_basis.transpose();
}

void validate_covariance(const CovarianceFactor& cov, double condition_number) {
  const int d = cov.dim();
  const Mat gram = cov.orthogonal_basis.transpose() * cov.orthogonal_basis;
  const double ortho_err = (gram - Mat::Identity(d, d)).cwiseAbs().maxCoeff();
  if (ortho_err > 1e-10) {
    throw InvariantViolation("covariance basis not orthonormal to 1e-10");
  }
  for (int i = 0; i < d; ++i) {
    if (!(cov.eigenvalues[i] > 0.0)) {
      throw InvariantViolation("covariance eigenvalues must be positive");
    }
    if (i > 0 && cov.eigenvalues[i] > cov.eigenvalues[i - 1]) {
      throw InvariantViolation("covariance eigenvalues must be descending");
    }
  }
  const double realized = cov.eigenvalues[0] / cov.eigenvalues[d - 1];
  if (std::abs(realized - condition_number) > 1e-9 * condition_number) {
    throw InvariantViolation("covariance condition number off by more than 1e-9");
  }
}

}  // namespace betfree
