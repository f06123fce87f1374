#pragma once

// Group-action structure on frames: adjugation, the GL action, connecting
// operators, unitary equivalence of Parseval frames, a computable canonical
// representative per unitary orbit, and the unique factorization
// f = S(f)^{1/2} * U * sigma.

#include <optional>

#include "framekit/frame.hpp"

namespace framekit {

struct Factorization {
  Matrix positive_part;  // S(f)^{1/2}
  Matrix unitary_part;
  Frame transversal;     // canonical Parseval representative
};

struct CanonicalParseval {
  Frame sigma;     // canonical representative, f = act(unitary, sigma)
  Matrix unitary;
};

// ad_A(B) = A B A^*.
Matrix adjugate(const Matrix& a, const Matrix& b);

// (Af)(x) = A[f(x)]; frame operator transforms as ad_A(S(f)).
Frame act(const Matrix& a, const Frame& f);

// If some invertible A maps f pointwise onto g, returns it; the candidate
// A = (sum_i w_i g_i f_i^*) S(f)^{-1} is verified pointwise before being
// returned, so a nullopt answer means no such A exists at the tolerance.
std::optional<Matrix> connecting_operator(const Frame& f, const Frame& g,
                                          double tolerance);

// Unitary connecting two Parseval frames, or nullopt when the candidate
// U = sum_i w_i g_i f_i^* fails the unitary or pointwise check.
// Throws NotParseval when either input is not Parseval.
std::optional<Matrix> unitary_equivalent(const Frame& f, const Frame& g,
                                         double tolerance);

// Canonical representative of a Parseval frame's unitary orbit.
//
// The weighted Gram projector P = M M^* (M the weighted frame matrix) is an
// exact invariant of the orbit; the representative is built from P by
// column-pivoted Gram-Schmidt with a fixed tie-break, followed by a phase
// convention making each column's largest-modulus entry real and positive
// (entries compared at resolution 1e-9, lowest row index winning ties).
// Raises DegenerateCanonicalForm when pivoting cannot make a stable choice.
CanonicalParseval canonical_parseval(const Frame& f);

// f = sqrt(S(f)) * unitary_part acting on the transversal.
Factorization factorize(const Frame& f);

// Reassemble a frame from its factorization: act(P * U, transversal).
Frame reassemble(const Factorization& parts);

}  // namespace framekit
