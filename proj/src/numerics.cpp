#include "framekit/numerics.hpp"

#include <cmath>

namespace framekit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NodeMismatch: return "NodeMismatch";
    case ErrorCode::NotParseval: return "NotParseval";
    case ErrorCode::DegenerateCanonicalForm: return "DegenerateCanonicalForm";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::NotOrthonormalFamily: return "NotOrthonormalFamily";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::ColumnNotUnit: return "ColumnNotUnit";
    case ErrorCode::EmptyColumn: return "EmptyColumn";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    raise(ErrorCode::NonFiniteInput,
          std::string(what) + ": matrix contains NaN or Inf entries");
  }
}

SvdResult svd(const Matrix& m) {
  if (m.rows() < 1 || m.cols() < 1) {
    raise(ErrorCode::InvalidArgument, "svd: empty matrix");
  }
  require_finite(m, "svd");
  Eigen::JacobiSVD<Matrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (solver.info() != Eigen::Success) {
    raise(ErrorCode::ConvergenceFailure, "svd: iteration did not converge");
  }
  return SvdResult{solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

EighResult eigh(const Matrix& a, double tolerance) {
  if (a.rows() != a.cols()) {
    raise(ErrorCode::DimensionMismatch, "eigh: matrix is not square");
  }
  require_finite(a, "eigh");
  const double scale = std::max(1.0, a.norm());
  if ((a - a.adjoint()).norm() > tolerance * scale) {
    raise(ErrorCode::NotHermitian, "eigh: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(
      Matrix(0.5 * (a + a.adjoint())));
  if (solver.info() != Eigen::Success) {
    raise(ErrorCode::ConvergenceFailure, "eigh: iteration did not converge");
  }
  return EighResult{solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

// Shared core of sqrt_psd / inv_sqrt_psd: eigendecompose, demand strict
// positivity, map the spectrum.
Matrix psd_power(const Matrix& a, double exponent, const char* what) {
  EighResult eig = eigh(a);
  const double largest = eig.eigenvalues(eig.eigenvalues.size() - 1);
  const double floor = tol::invertible * std::max(1.0, largest);
  if (eig.eigenvalues(0) <= floor) {
    raise(ErrorCode::NotPositive,
          std::string(what) + ": eigenvalue at or below invertibility threshold");
  }
  RealVector mapped = eig.eigenvalues.array().pow(exponent);
  return eig.eigenvectors * mapped.asDiagonal() *
         eig.eigenvectors.adjoint();
}

}  // namespace

Matrix sqrt_psd(const Matrix& a) { return psd_power(a, 0.5, "sqrt_psd"); }

Matrix inv_sqrt_psd(const Matrix& a) {
  return psd_power(a, -0.5, "inv_sqrt_psd");
}

PolarResult polar(const Matrix& a) {
  if (a.rows() != a.cols()) {
    raise(ErrorCode::DimensionMismatch, "polar: matrix is not square");
  }
  SvdResult f = svd(a);
  const double smax = f.singular_values(0);
  const double smin = f.singular_values(f.singular_values.size() - 1);
  if (smin <= tol::invertible * std::max(1.0, smax)) {
    raise(ErrorCode::NotInvertible, "polar: matrix is numerically singular");
  }
  // A = W S V*  =>  P = W S W*, U = W V*.
  Matrix p = f.left * f.singular_values.asDiagonal() * f.left.adjoint();
  Matrix u = f.left * f.right.adjoint();
  return PolarResult{std::move(p), std::move(u)};
}

TagSet classify(const Matrix& a, double tolerance) {
  TagSet tags;
  if (a.rows() != a.cols() || a.rows() == 0 || !a.allFinite()) {
    return tags;
  }
  const double scale = std::max(1.0, a.norm());
  tags.hermitian = (a - a.adjoint()).norm() <= tolerance * scale;

  Eigen::JacobiSVD<Matrix> solver(a);
  const double smax = solver.singularValues()(0);
  const double smin = solver.singularValues()(a.rows() - 1);
  tags.invertible = smin > tolerance * std::max(1.0, smax);

  Matrix gram = a * a.adjoint();
  gram -= Matrix::Identity(a.rows(), a.cols());
  tags.unitary = gram.norm() <= tolerance * std::sqrt(double(a.rows()));
  if (tags.unitary) tags.invertible = true;

  if (tags.hermitian && tags.invertible) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(Matrix(0.5 * (a + a.adjoint())),
                                              Eigen::EigenvaluesOnly);
    tags.positive = eig.eigenvalues()(0) > tolerance * std::max(1.0, smax);
  }
  return tags;
}

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> solver(a);
  return solver.singularValues()(0);
}

}  // namespace framekit
