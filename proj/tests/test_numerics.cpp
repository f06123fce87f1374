#include <doctest.h>

#include "framekit/numerics.hpp"
#include "framekit/rng.hpp"
#include "oracles.hpp"

using namespace framekit;

namespace {

Matrix diag2(Complex a, Complex b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

double reconstruction_residual(const Matrix& m, const SvdResult& f) {
  Matrix sigma = Matrix::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < f.singular_values.size(); ++i) {
    sigma(i, i) = f.singular_values(i);
  }
  return (m - f.left * sigma * f.right.adjoint()).norm();
}

}  // namespace

TEST_CASE("svd of the identity") {
  SvdResult f = svd(Matrix::Identity(2, 2));
  CHECK(f.singular_values(0) == doctest::Approx(1.0));
  CHECK(f.singular_values(1) == doctest::Approx(1.0));
}

TEST_CASE("svd of stacked basis rows matches the 2x2 eigenvalue oracle") {
  // Rows e1*, e1*, e2*; T*T = diag(2, 1).
  Matrix t = Matrix::Zero(3, 2);
  t(0, 0) = 1.0;
  t(1, 0) = 1.0;
  t(2, 1) = 1.0;
  Matrix gram = t.adjoint() * t;
  auto eigs = oracle::eig2x2(gram(0, 0).real(), gram(0, 1), gram(1, 1).real());
  SvdResult f = svd(t);
  CHECK(f.singular_values(0) == doctest::Approx(std::sqrt(eigs[1])));
  CHECK(f.singular_values(1) == doctest::Approx(std::sqrt(eigs[0])));
}

TEST_CASE("partial isometries have unit singular values") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 2 + trial % 4;
    const int n = m + 1 + trial % 3;
    Matrix pad = Matrix::Zero(n, m);
    pad.topRows(m) = Matrix::Identity(m, m);
    Matrix t = rng.unitary(n) * pad * rng.unitary(m).adjoint();
    SvdResult f = svd(t);
    for (Eigen::Index i = 0; i < m; ++i) {
      CHECK(std::abs(f.singular_values(i) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("svd reconstruction residual stays below 1e-12") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + int(rng.uniform() * 64);
    const int m = 1 + int(rng.uniform() * 64);
    Matrix mat = rng.gaussian_matrix(n, m);
    SvdResult f = svd(mat);
    CHECK(reconstruction_residual(mat, f) <= 1e-12 * std::max(1.0, mat.norm()));
    CHECK(classify(f.left).unitary);
    CHECK(classify(f.right).unitary);
    for (Eigen::Index i = 0; i + 1 < f.singular_values.size(); ++i) {
      CHECK(f.singular_values(i) >= f.singular_values(i + 1));
    }
  }
}

TEST_CASE("svd rejects non-finite input") {
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(svd(m), Error);
  try {
    svd(m);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonFiniteInput);
  }
}

TEST_CASE("eigh on diagonal and projector inputs") {
  EighResult d = eigh(diag2(2.0, 1.0));
  CHECK(d.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(d.eigenvalues(1) == doctest::Approx(2.0));

  EighResult id = eigh(Matrix::Identity(3, 3));
  for (int i = 0; i < 3; ++i) CHECK(id.eigenvalues(i) == doctest::Approx(1.0));

  Vector v(2);
  v << Complex(0.6, 0.0), Complex(0.0, 0.8);
  Matrix proj = v * v.adjoint();
  EighResult p = eigh(proj);
  CHECK(p.eigenvalues(0) == doctest::Approx(0.0));
  CHECK(p.eigenvalues(1) == doctest::Approx(1.0));
}

TEST_CASE("eigh reconstructs and rejects non-Hermitian input") {
  Rng rng(3);
  Matrix a = rng.gaussian_matrix(5, 5);
  Matrix h = a + a.adjoint();
  EighResult e = eigh(h);
  Matrix back = e.eigenvectors *
                e.eigenvalues.cast<Complex>().asDiagonal() *
                e.eigenvectors.adjoint();
  CHECK((h - back).norm() <= 1e-12 * h.norm());
  CHECK(classify(e.eigenvectors).unitary);

  CHECK_THROWS_AS(eigh(a), Error);
}

TEST_CASE("sqrt_psd: diagonal cases and residual oracle") {
  CHECK((sqrt_psd(Matrix::Identity(3, 3)) - Matrix::Identity(3, 3)).norm() <
        1e-14);
  Matrix r = sqrt_psd(diag2(4.0, 9.0));
  CHECK(std::abs(r(0, 0) - Complex(2.0)) < 1e-13);
  CHECK(std::abs(r(1, 1) - Complex(3.0)) < 1e-13);

  Rng rng(21);
  Matrix a = rng.gaussian_matrix(4, 4);
  Matrix p = a * a.adjoint() + Matrix::Identity(4, 4);
  Matrix root = sqrt_psd(p);
  CHECK((root * root - p).norm() <= 1e-12 * p.norm());
  CHECK(classify(root).positive);
}

TEST_CASE("sqrt_psd rejects non-positive input") {
  CHECK_THROWS_AS(sqrt_psd(diag2(1.0, 0.0)), Error);
  try {
    sqrt_psd(diag2(1.0, -1.0));
    FAIL("expected NotPositive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositive);
  }
}

TEST_CASE("inv_sqrt_psd: diagonal case and residual oracle") {
  Matrix r = inv_sqrt_psd(diag2(2.0, 1.0));
  CHECK(std::abs(r(0, 0) - Complex(1.0 / std::sqrt(2.0))) < 1e-13);
  CHECK(std::abs(r(1, 1) - Complex(1.0)) < 1e-13);

  Rng rng(22);
  Matrix a = rng.gaussian_matrix(4, 4);
  Matrix p = a * a.adjoint() + Matrix::Identity(4, 4);
  Matrix root = inv_sqrt_psd(p);
  CHECK((root * p * root - Matrix::Identity(4, 4)).norm() <= 1e-12);
}

TEST_CASE("sqrt and inverse sqrt agree") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + trial % 7;
    Matrix p = rng.positive(m, 5.0);
    Matrix prod = sqrt_psd(p) * inv_sqrt_psd(p);
    CHECK((prod - Matrix::Identity(m, m)).norm() <= 1e-11);
  }
}

TEST_CASE("polar factors of unitary and positive inputs") {
  Rng rng(31);
  Matrix w = rng.unitary(3);
  PolarResult pu = polar(w);
  CHECK((pu.positive - Matrix::Identity(3, 3)).norm() < 1e-12);
  CHECK((pu.unitary - w).norm() < 1e-12);

  Matrix p = rng.positive(3, 4.0);
  PolarResult pp = polar(p);
  CHECK((pp.positive - p).norm() <= 1e-11 * p.norm());
  CHECK((pp.unitary - Matrix::Identity(3, 3)).norm() < 1e-10);
}

TEST_CASE("polar of diag(2, 2i)") {
  Matrix a = diag2(2.0, Complex(0.0, 2.0));
  // AA* = diag(4, 4) by direct multiplication.
  CHECK((a * a.adjoint() - 4.0 * Matrix::Identity(2, 2)).norm() < 1e-15);
  PolarResult f = polar(a);
  CHECK((f.positive - 2.0 * Matrix::Identity(2, 2)).norm() < 1e-12);
  CHECK(std::abs(f.unitary(0, 0) - Complex(1.0)) < 1e-12);
  CHECK(std::abs(f.unitary(1, 1) - Complex(0.0, 1.0)) < 1e-12);
}

TEST_CASE("polar rejects singular input") {
  CHECK_THROWS_AS(polar(diag2(1.0, 0.0)), Error);
}

TEST_CASE("polar round trip over seeded invertible matrices") {
  Rng rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + trial % 16;
    Matrix a = rng.invertible(m, 20.0);
    PolarResult f = polar(a);
    CHECK((a - f.positive * f.unitary).norm() <= 1e-11 * a.norm());
    CHECK(classify(f.positive).positive);
    CHECK(classify(f.unitary).unitary);
  }
}

TEST_CASE("classify on canonical examples") {
  TagSet id = classify(Matrix::Identity(2, 2));
  CHECK(id.invertible);
  CHECK(id.positive);
  CHECK(id.unitary);
  CHECK(id.hermitian);

  TagSet sing = classify(diag2(1.0, 0.0));
  CHECK(sing.hermitian);
  CHECK_FALSE(sing.invertible);
  CHECK_FALSE(sing.positive);
  CHECK_FALSE(sing.unitary);

  TagSet refl = classify(diag2(1.0, -1.0));
  CHECK(refl.hermitian);
  CHECK(refl.invertible);
  CHECK(refl.unitary);
  CHECK_FALSE(refl.positive);
}

TEST_CASE("A A* classifies positive for invertible A") {
  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + trial % 8;
    Matrix a = rng.invertible(m, 8.0);
    CHECK(classify(Matrix(a * a.adjoint())).positive);
  }
}
