#include "framekit/orbit.hpp"

#include <cmath>
#include <string>

namespace framekit {

namespace {

// Window for pivot ties and phase ties. Much wider than the rounding noise
// of the orbit invariant P, so tie-breaking by index is stable across an
// orbit.
constexpr double kTieResolution = 1e-9;

Matrix mixed_gram(const Frame& f, const Frame& g) {
  // sum_i w_i g_i f_i^*
  Matrix x = Matrix::Zero(f.dim(), f.dim());
  for (int i = 0; i < f.count(); ++i) {
    x.noalias() += f.weights()[size_t(i)] * g.vectors().col(i) *
                   f.vectors().col(i).adjoint();
  }
  return x;
}

bool pointwise_close(const Frame& g, const Matrix& a, const Frame& f,
                     double tolerance) {
  const double scale = std::max(1.0, g.sup_norm());
  for (int i = 0; i < f.count(); ++i) {
    if ((g.vectors().col(i) - a * f.vectors().col(i)).norm() >
        tolerance * scale) {
      return false;
    }
  }
  return true;
}

void require_parseval(const Frame& f, const char* what) {
  if (!is_parseval(f)) {
    raise(ErrorCode::NotParseval, std::string(what) + ": frame is not Parseval");
  }
}

}  // namespace

Matrix adjugate(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    raise(ErrorCode::DimensionMismatch, "adjugate: incompatible dimensions");
  }
  return a * b * a.adjoint();
}

Frame act(const Matrix& a, const Frame& f) {
  if (a.rows() != a.cols() || a.rows() != f.dim()) {
    raise(ErrorCode::DimensionMismatch, "act: operator dimension != frame dim");
  }
  Eigen::JacobiSVD<Matrix> s(a);
  const double smax = s.singularValues()(0);
  const double smin = s.singularValues()(a.rows() - 1);
  if (smin <= tol::invertible * std::max(1.0, smax)) {
    raise(ErrorCode::NotInvertible, "act: operator is numerically singular");
  }
  return f.with_vectors(a * f.vectors());
}

std::optional<Matrix> connecting_operator(const Frame& f, const Frame& g,
                                          double tolerance) {
  require_compatible(f, g, "connecting_operator");
  Matrix s = frame_operator(f);
  Matrix candidate = s.adjoint().ldlt().solve(mixed_gram(f, g).adjoint()).adjoint();
  if (!classify(candidate).invertible) {
    return std::nullopt;
  }
  if (!pointwise_close(g, candidate, f, tolerance)) {
    return std::nullopt;
  }
  return candidate;
}

std::optional<Matrix> unitary_equivalent(const Frame& f, const Frame& g,
                                         double tolerance) {
  require_compatible(f, g, "unitary_equivalent");
  require_parseval(f, "unitary_equivalent");
  require_parseval(g, "unitary_equivalent");
  Matrix candidate = mixed_gram(f, g);
  Matrix defect = candidate * candidate.adjoint() -
                  Matrix::Identity(f.dim(), f.dim());
  if (defect.norm() > std::max(tolerance, tol::unitary)) {
    return std::nullopt;
  }
  if (!pointwise_close(g, candidate, f, tolerance)) {
    return std::nullopt;
  }
  return candidate;
}

CanonicalParseval canonical_parseval(const Frame& f) {
  require_parseval(f, "canonical_parseval");
  const int m = f.dim();
  const int n = f.count();
  Matrix weighted = f.weighted_matrix();      // n x m
  Matrix projector = weighted * weighted.adjoint();  // orbit invariant

  // Column-pivoted modified Gram-Schmidt on the projector's columns.
  Matrix work = projector;
  Matrix basis(n, m);
  for (int step = 0; step < m; ++step) {
    double best = -1.0;
    int pivot = -1;
    for (int j = 0; j < n; ++j) {
      const double norm = work.col(j).norm();
      if (norm > best * (1.0 + kTieResolution)) {
        best = norm;
        pivot = j;
      }
      // Near-tie: keep the lowest index already chosen.
    }
    if (pivot < 0 || best <= 1e-8) {
      raise(ErrorCode::DegenerateCanonicalForm,
            "canonical_parseval: pivot collapse at step " +
                std::to_string(step));
    }
    Vector q = work.col(pivot) / best;
    basis.col(step) = q;
    work -= q * (q.adjoint() * work);
  }

  // Phase convention: rotate each column so its largest-modulus entry
  // (lowest row index on ties at resolution kTieResolution) is real and
  // positive.
  for (int c = 0; c < m; ++c) {
    double max_mod = 0.0;
    for (int r = 0; r < n; ++r) {
      max_mod = std::max(max_mod, std::abs(basis(r, c)));
    }
    int anchor = 0;
    for (int r = 0; r < n; ++r) {
      if (std::abs(basis(r, c)) >= max_mod - kTieResolution) {
        anchor = r;
        break;
      }
    }
    Complex entry = basis(anchor, c);
    basis.col(c) *= std::conj(entry) / std::abs(entry);
  }

  // basis is the canonical weighted matrix; undo the weights to get the
  // frame vectors, and recover the connecting unitary u = M^* C.
  Matrix sigma_vectors = basis.adjoint();  // m x n
  for (int i = 0; i < n; ++i) {
    sigma_vectors.col(i) /= std::sqrt(f.weights()[size_t(i)]);
  }
  Matrix u = weighted.adjoint() * basis;
  if (!classify(u, 1e-8).unitary) {
    raise(ErrorCode::DegenerateCanonicalForm,
          "canonical_parseval: connecting operator drifted off the unitary "
          "group");
  }
  return CanonicalParseval{f.with_vectors(std::move(sigma_vectors)),
                           std::move(u)};
}

Factorization factorize(const Frame& f) {
  Matrix positive = sqrt_psd(frame_operator(f));
  CanonicalParseval canonical = canonical_parseval(parsevalize(f));
  return Factorization{std::move(positive), std::move(canonical.unitary),
                       std::move(canonical.sigma)};
}

Frame reassemble(const Factorization& parts) {
  return act(parts.positive_part * parts.unitary_part, parts.transversal);
}

}  // namespace framekit
