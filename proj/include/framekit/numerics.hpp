#pragma once

// Dense complex linear algebra used by every other module: SVD, Hermitian
// eigendecomposition, principal matrix square roots, polar decomposition and
// operator classification. Kernels are backed by Eigen; the contracts here
// (tolerances, error codes, factor conventions) are the library's own.

#include <complex>

#include <Eigen/Dense>

#include "framekit/errors.hpp"

namespace framekit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
// Residual checks are relative: tolerance * max(1, norm of the input).
inline constexpr double residual = 1e-10;
// An operator counts as invertible when s_min > invertible * s_max.
inline constexpr double invertible = 1e-12;
inline constexpr double unitary = 1e-10;
// Parseval checks: sampled frames carry quadrature noise, finite ones do not.
inline constexpr double parseval_finite = 1e-10;
inline constexpr double parseval_sampled = 1e-8;
}  // namespace tol

// Operator classification as a small flag set. Classification never fails;
// an empty set is a valid answer.
struct TagSet {
  bool hermitian = false;
  bool invertible = false;
  bool positive = false;
  bool unitary = false;
};

struct SvdResult {
  Matrix left;                  // n x n unitary
  RealVector singular_values;   // nonincreasing, length min(n, m)
  Matrix right;                 // m x m unitary
};

struct EighResult {
  RealVector eigenvalues;  // nondecreasing
  Matrix eigenvectors;     // unitary, columns are eigenvectors
};

struct PolarResult {
  Matrix positive;  // principal square root of A A*
  Matrix unitary;   // A = positive * unitary
};

// Throws NonFiniteInput if any entry is NaN or infinite.
void require_finite(const Matrix& m, const char* what);

// Full SVD M = left * diag(singular_values) (padded) * right^*.
// The left/right factors are not unique under repeated singular values;
// callers must depend only on reconstruction residuals.
SvdResult svd(const Matrix& m);

// Hermitian eigendecomposition A = Q diag(lambda) Q^*.
// Throws NotHermitian when ||A - A*|| > tol * max(1, ||A||).
EighResult eigh(const Matrix& a, double tolerance = tol::residual);

// Principal square root of a positive definite matrix.
// Throws NotPositive when an eigenvalue falls at or below the invertibility
// threshold.
Matrix sqrt_psd(const Matrix& a);

// Principal inverse square root; same preconditions as sqrt_psd.
Matrix inv_sqrt_psd(const Matrix& a);

// Left polar decomposition A = P U with P positive and U unitary,
// matching the positive-times-unitary factor order used throughout.
// Throws NotInvertible for (numerically) singular input.
PolarResult polar(const Matrix& a);

TagSet classify(const Matrix& a, double tolerance = tol::residual);

// Spectral (operator 2-) norm.
double operator_norm(const Matrix& a);

}  // namespace framekit
