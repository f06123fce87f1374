#include "framekit/frame.hpp"

#include <cmath>
#include <string>

namespace framekit {

namespace {

Matrix raw_frame_operator(const Matrix& vectors,
                          const std::vector<double>& weights) {
  const auto m = vectors.rows();
  Matrix s = Matrix::Zero(m, m);
  for (Eigen::Index i = 0; i < vectors.cols(); ++i) {
    s.noalias() += weights[size_t(i)] * vectors.col(i) * vectors.col(i).adjoint();
  }
  // Force exact Hermitian symmetry; the summation already is up to rounding.
  return 0.5 * (s + s.adjoint());
}

double smallest_frame_eigenvalue(const Matrix& vectors,
                                 const std::vector<double>& weights) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(
      raw_frame_operator(vectors, weights), Eigen::EigenvaluesOnly);
  return eig.eigenvalues()(0);
}

}  // namespace

Frame::Frame(Matrix vectors, std::optional<std::vector<double>> nodes,
             std::vector<double> weights)
    : vectors_(std::move(vectors)),
      nodes_(std::move(nodes)),
      weights_(std::move(weights)) {
  const auto m = vectors_.rows();
  const auto n = vectors_.cols();
  if (m < 1 || n < m) {
    raise(ErrorCode::NotAFrame,
          "frame needs n >= m >= 1, got m=" + std::to_string(m) +
              " n=" + std::to_string(n));
  }
  require_finite(vectors_, "frame");
  if (weights_.size() != size_t(n)) {
    raise(ErrorCode::DimensionMismatch, "frame: weight count != vector count");
  }
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      raise(ErrorCode::NotAFrame, "frame: weights must be positive and finite");
    }
  }
  if (nodes_) {
    if (nodes_->size() != size_t(n)) {
      raise(ErrorCode::NodeMismatch, "frame: node count != vector count");
    }
    for (size_t i = 0; i + 1 < nodes_->size(); ++i) {
      if (!((*nodes_)[i] < (*nodes_)[i + 1])) {
        raise(ErrorCode::NotAFrame, "frame: nodes must be strictly increasing");
      }
    }
  }
  // Frame condition: the lower frame bound must be strictly positive.
  Eigen::JacobiSVD<Matrix> s(weighted_matrix());
  const double smax = s.singularValues()(0);
  const double smin = s.singularValues()(s.singularValues().size() - 1);
  if (smin * smin <= tol::invertible * std::max(1.0, smax * smax)) {
    raise(ErrorCode::NotAFrame, "frame: vectors do not span C^m");
  }
}

Frame Frame::finite(Matrix vectors) {
  std::vector<double> unit(size_t(vectors.cols()), 1.0);
  return Frame(std::move(vectors), std::nullopt, std::move(unit));
}

Frame Frame::sampled(Matrix vectors, std::vector<double> nodes,
                     std::vector<double> weights) {
  return Frame(std::move(vectors), std::move(nodes), std::move(weights));
}

const std::vector<double>& Frame::nodes() const {
  if (!nodes_) {
    raise(ErrorCode::InvalidArgument, "finite frame has no nodes");
  }
  return *nodes_;
}

Matrix Frame::weighted_matrix() const {
  Matrix t = vectors_.adjoint();  // n x m
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    t.row(i) *= std::sqrt(weights_[size_t(i)]);
  }
  return t;
}

Frame Frame::with_vectors(Matrix vectors) const {
  return Frame(std::move(vectors), nodes_, weights_);
}

double Frame::sup_norm() const {
  double best = 0.0;
  for (Eigen::Index i = 0; i < vectors_.cols(); ++i) {
    best = std::max(best, vectors_.col(i).norm());
  }
  return best;
}

double Frame::weighted_l1_norm() const {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < vectors_.cols(); ++i) {
    sum += weights_[size_t(i)] * vectors_.col(i).norm();
  }
  return sum;
}

Matrix frame_operator(const Frame& f) {
  Matrix s = raw_frame_operator(f.vectors(), f.weights());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(s, Eigen::EigenvaluesOnly);
  const double largest = eig.eigenvalues()(f.dim() - 1);
  if (eig.eigenvalues()(0) <= tol::invertible * std::max(1.0, largest)) {
    raise(ErrorCode::NotAFrame, "frame_operator: rank-deficient frame");
  }
  return s;
}

CoefficientVector analysis(const Frame& f, const Vector& phi) {
  if (phi.size() != f.dim()) {
    raise(ErrorCode::DimensionMismatch, "analysis: phi length != frame dim");
  }
  return CoefficientVector{f.vectors().adjoint() * phi, f.weights()};
}

Vector synthesis(const Frame& f, const Vector& coefficients) {
  if (coefficients.size() != f.count()) {
    raise(ErrorCode::DimensionMismatch,
          "synthesis: coefficient length != frame size");
  }
  Vector out = Vector::Zero(f.dim());
  for (Eigen::Index i = 0; i < coefficients.size(); ++i) {
    out += f.weights()[size_t(i)] * coefficients(i) * f.vectors().col(i);
  }
  return out;
}

FrameAnalysis frame_bounds(const Frame& f) {
  Eigen::JacobiSVD<Matrix> s(f.weighted_matrix());
  RealVector sv = s.singularValues();
  FrameAnalysis report;
  report.singular_values = sv;
  report.upper_bound_b = sv(0) * sv(0);
  report.lower_bound_a = sv(sv.size() - 1) * sv(sv.size() - 1);

  // Cross-check against Theorem-style bounds 1/||S^{-1}||, ||S||.
  Eigen::SelfAdjointEigenSolver<Matrix> eig(frame_operator(f),
                                            Eigen::EigenvaluesOnly);
  const double a2 = eig.eigenvalues()(0);
  const double b2 = eig.eigenvalues()(f.dim() - 1);
  if (std::abs(a2 - report.lower_bound_a) > 1e-10 * std::max(1.0, b2) ||
      std::abs(b2 - report.upper_bound_b) > 1e-10 * std::max(1.0, b2)) {
    raise(ErrorCode::ConvergenceFailure,
          "frame_bounds: SVD and frame-operator routes disagree");
  }

  const double ptol = default_parseval_tolerance(f);
  report.parseval = std::abs(report.lower_bound_a - 1.0) <= ptol &&
                    std::abs(report.upper_bound_b - 1.0) <= ptol;
  report.condition = report.upper_bound_b / report.lower_bound_a;
  return report;
}

double default_parseval_tolerance(const Frame& f) {
  return f.is_sampled() ? tol::parseval_sampled : tol::parseval_finite;
}

bool is_parseval(const Frame& f, double tolerance) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(frame_operator(f),
                                            Eigen::EigenvaluesOnly);
  // ||S - I|| for Hermitian S is the largest |eigenvalue - 1|.
  const double lo = eig.eigenvalues()(0);
  const double hi = eig.eigenvalues()(f.dim() - 1);
  return std::max(std::abs(lo - 1.0), std::abs(hi - 1.0)) <= tolerance;
}

bool is_parseval(const Frame& f) {
  return is_parseval(f, default_parseval_tolerance(f));
}

Frame canonical_dual(const Frame& f) {
  Matrix s = frame_operator(f);
  return f.with_vectors(s.ldlt().solve(f.vectors()));
}

Vector reconstruct(const Frame& f, const Frame& dual, const Vector& phi) {
  require_compatible(f, dual, "reconstruct");
  if (phi.size() != f.dim()) {
    raise(ErrorCode::DimensionMismatch, "reconstruct: phi length != frame dim");
  }
  return synthesis(dual, analysis(f, phi).values);
}

Frame parsevalize(const Frame& f) {
  Matrix root = inv_sqrt_psd(frame_operator(f));
  return f.with_vectors(root * f.vectors());
}

void require_compatible(const Frame& f, const Frame& g, const char* what) {
  const std::string prefix(what);
  if (f.dim() != g.dim()) {
    raise(ErrorCode::DimensionMismatch, prefix + ": frame dimensions differ");
  }
  if (f.count() != g.count()) {
    raise(ErrorCode::NodeMismatch, prefix + ": frame index sets differ");
  }
  if (f.is_sampled() != g.is_sampled()) {
    raise(ErrorCode::NodeMismatch, prefix + ": finite vs sampled mismatch");
  }
  for (int i = 0; i < f.count(); ++i) {
    const double wf = f.weights()[size_t(i)];
    const double wg = g.weights()[size_t(i)];
    if (std::abs(wf - wg) > 1e-12 * std::max(1.0, std::abs(wf))) {
      raise(ErrorCode::NodeMismatch, prefix + ": weights differ");
    }
  }
  if (f.is_sampled()) {
    for (int i = 0; i < f.count(); ++i) {
      const double a = f.nodes()[size_t(i)];
      const double b = g.nodes()[size_t(i)];
      if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a))) {
        raise(ErrorCode::NodeMismatch, prefix + ": nodes differ");
      }
    }
  }
}

}  // namespace framekit
