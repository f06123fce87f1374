#include "framekit/framekit.h"

#include <cstring>
#include <numbers>
#include <string>

#include "framekit/frame_io.hpp"
#include "framekit/generators.hpp"
#include "framekit/orbit.hpp"
#include "framekit/rng.hpp"

using namespace framekit;

struct fk_frame {
  Frame value;
};

struct fk_matrix {
  Matrix value;
};

namespace {

thread_local std::string g_last_error;

fk_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return FK_ERR_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return FK_ERR_PARSE;
    case ErrorCode::NotAFrame: return FK_ERR_NOT_A_FRAME;
    case ErrorCode::NotParseval: return FK_ERR_NOT_PARSEVAL;
    case ErrorCode::ConvergenceFailure:
    case ErrorCode::DegenerateCanonicalForm: return FK_ERR_NUMERIC;
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NodeMismatch: return FK_ERR_DIMENSION;
    default: return FK_ERR_DOMAIN;
  }
}

fk_status fail(fk_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
fk_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return FK_OK;
  } catch (const Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(FK_ERR_NUMERIC, e.what());
  }
}

}  // namespace

extern "C" {

const char* fk_version(void) { return FRAMEKIT_VERSION; }

const char* fk_last_error(void) { return g_last_error.c_str(); }

fk_status fk_frame_parse_json(const char* text, fk_frame** out) {
  if (!text || !out) return fail(FK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new fk_frame{parse_frame_file(text)}; });
}

fk_status fk_frame_emit_json(const fk_frame* f, char** out) {
  if (!f || !out) return fail(FK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::string text = emit_frame_file(f->value);
    *out = new char[text.size() + 1];
    std::memcpy(*out, text.c_str(), text.size() + 1);
  });
}

void fk_frame_release(fk_frame* f) { delete f; }
void fk_string_release(char* s) { delete[] s; }

int fk_frame_dim(const fk_frame* f) { return f ? f->value.dim() : 0; }
int fk_frame_count(const fk_frame* f) { return f ? f->value.count() : 0; }
int fk_frame_is_sampled(const fk_frame* f) {
  return (f && f->value.is_sampled()) ? 1 : 0;
}

fk_status fk_frame_analyze(const fk_frame* f, double tol, fk_report* out) {
  if (!f || !out) return fail(FK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    FrameAnalysis report = frame_bounds(f->value);
    out->lower_bound_a = report.lower_bound_a;
    out->upper_bound_b = report.upper_bound_b;
    out->condition = report.condition;
    const double ptol =
        tol < 0.0 ? default_parseval_tolerance(f->value) : tol;
    out->is_parseval = is_parseval(f->value, ptol) ? 1 : 0;
  });
}

fk_status fk_frame_singular_values(const fk_frame* f, double* buf) {
  if (!f || !buf) return fail(FK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    FrameAnalysis report = frame_bounds(f->value);
    for (Eigen::Index i = 0; i < report.singular_values.size(); ++i) {
      buf[i] = report.singular_values(i);
    }
  });
}

fk_status fk_frame_parsevalize(const fk_frame* f, fk_frame** out) {
  if (!f || !out) return fail(FK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new fk_frame{parsevalize(f->value)}; });
}

fk_status fk_frame_canonical_dual(const fk_frame* f, fk_frame** out) {
  if (!f || !out) return fail(FK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new fk_frame{canonical_dual(f->value)}; });
}

fk_status fk_frame_factorize(const fk_frame* f, fk_matrix** positive_part,
                             fk_matrix** unitary_part, fk_frame** transversal) {
  if (!f || !positive_part || !unitary_part || !transversal) {
    return fail(FK_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    Factorization parts = factorize(f->value);
    *positive_part = new fk_matrix{std::move(parts.positive_part)};
    *unitary_part = new fk_matrix{std::move(parts.unitary_part)};
    *transversal = new fk_frame{std::move(parts.transversal)};
  });
}

fk_status fk_frame_connecting(const fk_frame* f, const fk_frame* g, double tol,
                              fk_matrix** out) {
  if (!f || !g || !out) return fail(FK_ERR_INVALID_ARGUMENT, "null argument");
  bool connected = true;
  fk_status status = guarded([&] {
    auto a = connecting_operator(f->value, g->value, tol);
    if (a) {
      *out = new fk_matrix{std::move(*a)};
    } else {
      connected = false;
    }
  });
  if (status == FK_OK && !connected) {
    return fail(FK_ERR_NOT_CONNECTED,
                "no invertible operator connects the frames");
  }
  return status;
}

fk_status fk_frame_unitary_equivalent(const fk_frame* f, const fk_frame* g,
                                      double tol, fk_matrix** out) {
  if (!f || !g || !out) return fail(FK_ERR_INVALID_ARGUMENT, "null argument");
  bool equivalent = true;
  fk_status status = guarded([&] {
    auto u = unitary_equivalent(f->value, g->value, tol);
    if (u) {
      *out = new fk_matrix{std::move(*u)};
    } else {
      equivalent = false;
    }
  });
  if (status == FK_OK && !equivalent) {
    return fail(FK_ERR_NOT_EQUIVALENT, "frames are not unitarily equivalent");
  }
  return status;
}

int fk_matrix_rows(const fk_matrix* m) {
  return m ? int(m->value.rows()) : 0;
}
int fk_matrix_cols(const fk_matrix* m) {
  return m ? int(m->value.cols()) : 0;
}

fk_status fk_matrix_copy(const fk_matrix* m, double* buf) {
  if (!m || !buf) return fail(FK_ERR_INVALID_ARGUMENT, "null argument");
  size_t k = 0;
  for (Eigen::Index r = 0; r < m->value.rows(); ++r) {
    for (Eigen::Index c = 0; c < m->value.cols(); ++c) {
      buf[k++] = m->value(r, c).real();
      buf[k++] = m->value(r, c).imag();
    }
  }
  g_last_error.clear();
  return FK_OK;
}

void fk_matrix_release(fk_matrix* m) { delete m; }

fk_status fk_generate_exponential(int dim, int nodes_per_unit, fk_frame** out) {
  if (!out) return fail(FK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new fk_frame{exponential_frame(Matrix::Identity(dim, dim),
                                          uniform_grid(dim, nodes_per_unit))};
  });
}

fk_status fk_generate_cos_sin(int dim, int nodes_per_unit, fk_frame** out) {
  if (!out) return fail(FK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Matrix id = Matrix::Identity(dim, dim);
    Matrix reversed = id.rowwise().reverse();
    *out = new fk_frame{
        cos_sin_frame(id, reversed, uniform_grid(dim, nodes_per_unit))};
  });
}

fk_status fk_generate_tensor(int dim, int nodes_per_unit, fk_frame** out) {
  if (!out) return fail(FK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    QuadratureGrid grid = uniform_grid(dim, nodes_per_unit);
    Matrix id = Matrix::Identity(dim, dim);
    Frame f = exponential_frame(id, grid);
    Matrix basis_vectors(dim, grid.nodes.size());
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
      basis_vectors.col(Eigen::Index(i)) =
          id.col(std::min(int(grid.nodes[i]), dim - 1));
    }
    Frame g = Frame::sampled(std::move(basis_vectors), grid.nodes, grid.weights);

    const int ny = std::max(nodes_per_unit, 3);
    Matrix alpha(2, ny);
    std::vector<double> nu(size_t(ny), 1.0 / ny);
    for (int l = 0; l < ny; ++l) {
      const double y = (l + 0.5) / ny;
      alpha(0, l) = std::cos(2.0 * std::numbers::pi * y);
      alpha(1, l) = Complex(0.0, std::sin(2.0 * std::numbers::pi * y));
    }
    *out = new fk_frame{tensor_frame({f, g}, alpha, nu)};
  });
}

fk_status fk_generate_msigma(int count, int dim, uint64_t seed, fk_frame** out) {
  if (!out) return fail(FK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    if (dim < 1 || count < dim) {
      raise(ErrorCode::InvalidArgument, "msigma: need count >= dim >= 1");
    }
    const size_t rows = size_t(count);
    std::vector<std::optional<int>> pattern(rows);
    std::vector<int> hits(size_t(dim), 0);
    for (int r = 0; r < count; ++r) {
      pattern[size_t(r)] = r % dim;
      hits[size_t(r % dim)] += 1;
    }
    std::vector<double> moduli(rows);
    for (int r = 0; r < count; ++r) {
      moduli[size_t(r)] = 1.0 / std::sqrt(double(hits[size_t(r % dim)]));
    }
    Rng rng(seed);
    std::vector<Complex> phases(rows);
    for (int r = 0; r < count; ++r) {
      const double angle = 2.0 * std::numbers::pi * rng.uniform();
      phases[size_t(r)] = std::exp(Complex(0.0, angle));
    }
    *out = new fk_frame{msigma_frame(pattern, moduli, phases, dim)};
  });
}

fk_status fk_generate_random(int count, int dim, uint64_t seed,
                             double condition_target, fk_frame** out) {
  if (!out) return fail(FK_ERR_INVALID_ARGUMENT, "null argument");
  return guarded(
      [&] { *out = new fk_frame{random_frame(count, dim, seed, condition_target)}; });
}

}  // extern "C"
