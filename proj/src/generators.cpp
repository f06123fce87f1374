#include "framekit/generators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "framekit/rng.hpp"

namespace framekit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_orthonormal_basis(const Matrix& basis, const char* what) {
  if (basis.rows() != basis.cols()) {
    raise(ErrorCode::NotOrthonormal,
          std::string(what) + ": basis must be square");
  }
  Matrix defect = basis.adjoint() * basis -
                  Matrix::Identity(basis.cols(), basis.cols());
  if (defect.norm() > tol::residual * std::sqrt(double(basis.cols()))) {
    raise(ErrorCode::NotOrthonormal,
          std::string(what) + ": basis columns are not orthonormal");
  }
}

void require_grid_matches(const Matrix& basis, const QuadratureGrid& grid,
                          const char* what) {
  if (grid.interval_end != basis.cols()) {
    raise(ErrorCode::GridMismatch,
          std::string(what) + ": grid interval length must equal the dimension");
  }
}

}  // namespace

QuadratureGrid uniform_grid(int d, int nodes_per_unit) {
  if (d < 1 || nodes_per_unit < 1) {
    raise(ErrorCode::InvalidArgument,
          "uniform_grid: d and nodes_per_unit must be positive");
  }
  QuadratureGrid grid;
  grid.interval_end = d;
  grid.nodes_per_unit = nodes_per_unit;
  const int total = d * nodes_per_unit;
  grid.nodes.reserve(size_t(total));
  grid.weights.assign(size_t(total), 1.0 / nodes_per_unit);
  for (int i = 0; i < total; ++i) {
    grid.nodes.push_back((i + 0.5) / nodes_per_unit);
  }
  return grid;
}

Frame exponential_frame(const Matrix& basis, const QuadratureGrid& grid) {
  require_orthonormal_basis(basis, "exponential_frame");
  require_grid_matches(basis, grid, "exponential_frame");
  const int m = int(basis.cols());
  Matrix vectors(m, grid.nodes.size());
  for (size_t i = 0; i < grid.nodes.size(); ++i) {
    const double x = grid.nodes[i];
    const int cell = std::min(int(std::floor(x)), m - 1);
    vectors.col(Eigen::Index(i)) =
        std::exp(Complex(0.0, kTwoPi * x)) * basis.col(cell);
  }
  return Frame::sampled(std::move(vectors), grid.nodes, grid.weights);
}

Frame cos_sin_frame(const Matrix& basis_f, const Matrix& basis_h,
                    const QuadratureGrid& grid) {
  require_orthonormal_basis(basis_f, "cos_sin_frame");
  require_orthonormal_basis(basis_h, "cos_sin_frame");
  if (basis_f.cols() != basis_h.cols()) {
    raise(ErrorCode::DimensionMismatch, "cos_sin_frame: basis sizes differ");
  }
  require_grid_matches(basis_f, grid, "cos_sin_frame");
  if (grid.nodes_per_unit < 3) {
    raise(ErrorCode::GridTooCoarse,
          "cos_sin_frame: needs at least 3 nodes per unit cell, got " +
              std::to_string(grid.nodes_per_unit));
  }
  const int m = int(basis_f.cols());
  Matrix vectors(m, grid.nodes.size());
  for (size_t i = 0; i < grid.nodes.size(); ++i) {
    const double x = grid.nodes[i];
    const int cell = std::min(int(std::floor(x)), m - 1);
    vectors.col(Eigen::Index(i)) =
        std::cos(kTwoPi * x) * basis_f.col(cell) +
        Complex(0.0, std::sin(kTwoPi * x)) * basis_h.col(cell);
  }
  return Frame::sampled(std::move(vectors), grid.nodes, grid.weights);
}

Frame tensor_frame(const std::vector<Frame>& frames, const Matrix& alpha,
                   const std::vector<double>& nu) {
  if (frames.empty() || alpha.rows() != Eigen::Index(frames.size()) ||
      alpha.cols() != Eigen::Index(nu.size()) || nu.empty()) {
    raise(ErrorCode::InvalidArgument,
          "tensor_frame: need one alpha row per frame and one column per "
          "second-grid node");
  }
  for (size_t j = 1; j < frames.size(); ++j) {
    require_compatible(frames[0], frames[j], "tensor_frame");
  }
  for (const Frame& f : frames) {
    if (!is_parseval(f)) {
      raise(ErrorCode::NotParseval, "tensor_frame: input frame is not Parseval");
    }
  }

  // Pairwise nu-orthogonality plus total squared mass 1: exactly what makes
  // the product frame operator collapse to the identity.
  const Eigen::Index p = alpha.rows();
  double total_mass = 0.0;
  for (Eigen::Index j = 0; j < p; ++j) {
    for (Eigen::Index k = j; k < p; ++k) {
      Complex inner = 0.0;
      for (size_t l = 0; l < nu.size(); ++l) {
        inner += nu[l] * alpha(j, Eigen::Index(l)) *
                 std::conj(alpha(k, Eigen::Index(l)));
      }
      if (j == k) {
        total_mass += inner.real();
      } else if (std::abs(inner) > 1e-10) {
        raise(ErrorCode::NotOrthonormalFamily,
              "tensor_frame: coefficient rows are not orthogonal");
      }
    }
  }
  if (std::abs(total_mass - 1.0) > 1e-10) {
    raise(ErrorCode::NotOrthonormalFamily,
          "tensor_frame: coefficient mass sum_j ||alpha_j||^2 must be 1");
  }

  const Frame& base = frames[0];
  const int m = base.dim();
  const int nx = base.count();
  const int ny = int(nu.size());
  Matrix vectors(m, Eigen::Index(nx) * ny);
  std::vector<double> nodes;
  std::vector<double> weights;
  nodes.reserve(size_t(nx) * size_t(ny));
  weights.reserve(size_t(nx) * size_t(ny));

  // Synthetic strictly-increasing product coordinates: block l spans one
  // copy of the x-node range.
  const double x_lo = base.is_sampled() ? base.nodes().front() : 0.0;
  const double x_hi = base.is_sampled() ? base.nodes().back() : double(nx - 1);
  const double span = (x_hi - x_lo) + 1.0;

  Eigen::Index col = 0;
  for (int l = 0; l < ny; ++l) {
    for (int i = 0; i < nx; ++i, ++col) {
      Vector v = Vector::Zero(m);
      for (Eigen::Index j = 0; j < p; ++j) {
        v += alpha(j, l) * frames[size_t(j)].vectors().col(i);
      }
      vectors.col(col) = v;
      const double x = base.is_sampled() ? base.nodes()[size_t(i)] : double(i);
      nodes.push_back(l * span + (x - x_lo));
      weights.push_back(base.weights()[size_t(i)] * nu[size_t(l)]);
    }
  }
  return Frame::sampled(std::move(vectors), std::move(nodes),
                        std::move(weights));
}

Frame parseval_from_unitary(const Matrix& u_big, const Matrix& v_small) {
  const int n = int(u_big.rows());
  const int m = int(v_small.rows());
  if (n < m) {
    raise(ErrorCode::DimensionMismatch,
          "parseval_from_unitary: need n >= m");
  }
  if (!classify(u_big).unitary) {
    raise(ErrorCode::NotUnitary, "parseval_from_unitary: U is not unitary");
  }
  if (!classify(v_small).unitary) {
    raise(ErrorCode::NotUnitary, "parseval_from_unitary: V is not unitary");
  }
  Matrix t = u_big.leftCols(m) * v_small.adjoint();  // n x m
  return Frame::finite(t.adjoint());
}

Frame msigma_frame(const std::vector<std::optional<int>>& pattern,
                   const std::vector<double>& moduli,
                   const std::vector<Complex>& phases, int dim) {
  const size_t n = pattern.size();
  if (dim < 1 || n < size_t(dim) || moduli.size() != n || phases.size() != n) {
    raise(ErrorCode::InvalidArgument,
          "msigma_frame: pattern, moduli and phases must agree and n >= m");
  }
  std::vector<double> column_mass(size_t(dim), 0.0);
  Matrix t = Matrix::Zero(Eigen::Index(n), dim);
  for (size_t r = 0; r < n; ++r) {
    if (!pattern[r]) continue;
    const int c = *pattern[r];
    if (c < 0 || c >= dim) {
      raise(ErrorCode::InvalidArgument, "msigma_frame: column index out of range");
    }
    if (std::abs(std::abs(phases[r]) - 1.0) > 1e-12) {
      raise(ErrorCode::InvalidArgument, "msigma_frame: phases must be unit");
    }
    t(Eigen::Index(r), c) = phases[r] * moduli[r];
    column_mass[size_t(c)] += moduli[r] * moduli[r];
  }
  for (int c = 0; c < dim; ++c) {
    if (column_mass[size_t(c)] == 0.0) {
      raise(ErrorCode::EmptyColumn,
            "msigma_frame: column " + std::to_string(c) + " has no entries");
    }
    if (std::abs(column_mass[size_t(c)] - 1.0) > 1e-12) {
      raise(ErrorCode::ColumnNotUnit,
            "msigma_frame: column " + std::to_string(c) + " is not unit");
    }
  }
  return Frame::finite(t.adjoint());
}

Frame random_frame(int n, int m, std::uint64_t seed, double condition_target) {
  if (m < 1 || n < m || condition_target < 1.0) {
    raise(ErrorCode::InvalidArgument,
          "random_frame: need n >= m >= 1 and condition_target >= 1");
  }
  Rng rng(seed);
  Matrix g = rng.gaussian_matrix(n, m);
  Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeThinU | Eigen::ComputeThinV);
  RealVector s(m);
  for (int j = 0; j < m; ++j) {
    // Geometric ramp from sqrt(condition_target) down to 1.
    const double t = (m > 1) ? double(j) / double(m - 1) : 1.0;
    s(j) = std::pow(condition_target, 0.5 * (1.0 - t));
  }
  Matrix t = svd.matrixU() * s.asDiagonal() * svd.matrixV().adjoint();
  return Frame::finite(t.adjoint());
}

}  // namespace framekit
