#pragma once

// Deterministic random test-data generation. Distribution code is written
// out (Box-Muller over raw mt19937_64 output) so that a fixed seed yields
// identical streams on every platform and standard library.

#include <cmath>
#include <numbers>
#include <random>

#include "framekit/numerics.hpp"

namespace framekit {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {  // [0, 1) with 53 bits
    return std::ldexp(double(gen_() >> 11), -53);
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im) / std::numbers::sqrt2;
  }

  Matrix gaussian_matrix(int rows, int cols) {
    Matrix out(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        out(r, c) = complex_gaussian();
      }
    }
    return out;
  }

  // Haar-ish unitary: QR of a Gaussian matrix with the R diagonal phases
  // absorbed into Q.
  Matrix unitary(int m) {
    Matrix g = gaussian_matrix(m, m);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < m; ++j) {
      Complex d = r(j, j);
      q.col(j) *= (std::abs(d) > 0.0) ? d / std::abs(d) : Complex(1.0, 0.0);
    }
    return q;
  }

  // Invertible matrix with singular values spread geometrically over
  // [1, condition]; keeps test conditioning under control.
  Matrix invertible(int m, double condition = 10.0) {
    Matrix u = unitary(m);
    Matrix v = unitary(m);
    RealVector s(m);
    for (int j = 0; j < m; ++j) {
      const double t = (m > 1) ? double(j) / double(m - 1) : 0.0;
      s(j) = std::pow(condition, t);
    }
    return u * s.asDiagonal() * v.adjoint();
  }

  Matrix positive(int m, double condition = 10.0) {
    Matrix u = unitary(m);
    RealVector s(m);
    for (int j = 0; j < m; ++j) {
      const double t = (m > 1) ? double(j) / double(m - 1) : 0.0;
      s(j) = std::pow(condition, t);
    }
    return Matrix(u * s.asDiagonal() * u.adjoint());
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace framekit
