#pragma once

// Constructors for the toolkit's example and test frames, plus the midpoint
// quadrature grids that discretize them. Midpoint rules reproduce the
// per-cell constant-modulus structure of the exponential and cos/sin frames
// exactly, so their Parseval property holds at machine precision rather
// than as a convergence statement.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "framekit/frame.hpp"

namespace framekit {

struct QuadratureGrid {
  int interval_end = 0;     // domain [0, d)
  int nodes_per_unit = 0;   // N
  std::vector<double> nodes;   // cell midpoints k + (j + 1/2) / N
  std::vector<double> weights; // constant 1 / N
};

QuadratureGrid uniform_grid(int d, int nodes_per_unit);

// F(x) = e^{i 2 pi x} b_{floor(x)} over [0, m) for an orthonormal basis b
// (columns of `basis`). Parseval at machine precision for every N >= 1.
Frame exponential_frame(const Matrix& basis, const QuadratureGrid& grid);

// F(x) = cos(2 pi x) f_{floor(x)} + i sin(2 pi x) h_{floor(x)}.
// Needs N >= 3 for the discrete orthogonality of cos^2, sin^2 and cos*sin;
// coarser grids are rejected with GridTooCoarse.
Frame cos_sin_frame(const Matrix& basis_f, const Matrix& basis_h,
                    const QuadratureGrid& grid);

// K(x_i, y_l) = sum_j alpha(j, l) F_j(x_i) on the product node set.
// The rows of `alpha` must be pairwise orthogonal in the nu-weighted inner
// product with squared norms summing to 1 (a discrete resolution of the
// identity); each F_j must be Parseval and all must share nodes/weights.
Frame tensor_frame(const std::vector<Frame>& frames, const Matrix& alpha,
                   const std::vector<double>& nu);

// T_p = U[:, 0:m] V^*; always Parseval with bounds (1, 1).
Frame parseval_from_unitary(const Matrix& u_big, const Matrix& v_small);

// Frame matrix whose row r carries the single entry
// phases[r] * moduli[r] in column pattern[r] (or no entry at all).
// Columns must be unit vectors and every column must be hit.
Frame msigma_frame(const std::vector<std::optional<int>>& pattern,
                   const std::vector<double>& moduli,
                   const std::vector<Complex>& phases, int dim);

// Seeded frame whose singular values ramp geometrically so that
// frame_bounds reports condition B/A = condition_target.
Frame random_frame(int n, int m, std::uint64_t seed, double condition_target);

}  // namespace framekit
