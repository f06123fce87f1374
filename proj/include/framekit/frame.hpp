#pragma once

// Frames as data plus the basic operator calculus: frame operator,
// analysis/synthesis, bounds, canonical duals and Parsevalization.
//
// A Frame holds one vector of C^m per index. Finite frames carry unit
// weights; sampled frames discretize a continuous frame as nodes with
// positive quadrature weights, and every integral below is the weighted sum
// over the node set. The weighted node set *is* the frame's measure space;
// no claim is made about any underlying continuum.

#include <optional>
#include <vector>

#include "framekit/numerics.hpp"

namespace framekit {

class Frame {
 public:
  // Finite frame with unit weights; `vectors` is m x n, column i = f_i.
  static Frame finite(Matrix vectors);

  // Sampled frame. Nodes must be strictly increasing, weights positive.
  static Frame sampled(Matrix vectors, std::vector<double> nodes,
                       std::vector<double> weights);

  int dim() const { return static_cast<int>(vectors_.rows()); }
  int count() const { return static_cast<int>(vectors_.cols()); }
  bool is_sampled() const { return nodes_.has_value(); }

  const Matrix& vectors() const { return vectors_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& nodes() const;

  // The n x m matrix T whose row i is f_i^*.
  Matrix frame_matrix() const { return vectors_.adjoint(); }
  // W^{1/2} T with W = diag(weights).
  Matrix weighted_matrix() const;

  // Replace the vectors, keeping nodes/weights; revalidates the frame
  // condition.
  Frame with_vectors(Matrix vectors) const;

  // sup_i ||f_i|| and the weighted 1-norm sum_i w_i ||f_i||.
  double sup_norm() const;
  double weighted_l1_norm() const;

 private:
  Frame(Matrix vectors, std::optional<std::vector<double>> nodes,
        std::vector<double> weights);

  Matrix vectors_;  // m x n, column i = f_i
  std::optional<std::vector<double>> nodes_;
  std::vector<double> weights_;
};

struct FrameAnalysis {
  double lower_bound_a = 0.0;
  double upper_bound_b = 0.0;
  RealVector singular_values;  // of the weighted matrix, nonincreasing
  bool parseval = false;
  double condition = 1.0;  // B / A
};

struct CoefficientVector {
  Vector values;                 // one coefficient per frame index
  std::vector<double> weights;   // copied from the frame
};

// S = sum_i w_i f_i f_i^*; positive and Hermitian for any valid frame.
// Throws NotAFrame on rank deficiency.
Matrix frame_operator(const Frame& f);

// (V phi)_i = <phi, f_i> = f_i^* phi.
CoefficientVector analysis(const Frame& f, const Vector& phi);

// V^* c = sum_i w_i c_i f_i.
Vector synthesis(const Frame& f, const Vector& coefficients);

// Frame bounds A = s_m^2, B = s_1^2 from the weighted matrix's singular
// values, cross-checked against the spectrum of the frame operator.
FrameAnalysis frame_bounds(const Frame& f);

// True iff ||S(f) - I|| <= tolerance in the operator norm.
bool is_parseval(const Frame& f, double tolerance);
bool is_parseval(const Frame& f);  // kind-dependent default tolerance

double default_parseval_tolerance(const Frame& f);

// Canonical dual: vectors S^{-1} f_i on the same nodes/weights.
Frame canonical_dual(const Frame& f);

// sum_i w_i <phi, f_i> dual_i. Returns the raw sum; it equals phi only when
// `dual` actually is a dual frame of `f`.
Vector reconstruct(const Frame& f, const Frame& dual, const Vector& phi);

// T(f) = S(f)^{-1/2} f; the result is Parseval and Parseval inputs are
// fixed pointwise.
Frame parsevalize(const Frame& f);

// Shared node set / weights / dimension check used by the binary
// operations. Throws DimensionMismatch or NodeMismatch.
void require_compatible(const Frame& f, const Frame& g, const char* what);

}  // namespace framekit
