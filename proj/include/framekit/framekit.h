#ifndef FRAMEKIT_FRAMEKIT_H
#define FRAMEKIT_FRAMEKIT_H

/* C API of the frame toolkit shared library.
 *
 * All objects are opaque handles released with the matching *_release call.
 * Every function returns FK_OK or an error code; fk_last_error() describes
 * the most recent failure on the calling thread. Output parameters are only
 * written on FK_OK.
 *
 * Complex matrices cross the boundary as row-major [re, im] interleaved
 * doubles (2 * rows * cols values).
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fk_frame fk_frame;
typedef struct fk_matrix fk_matrix;

typedef enum fk_status {
  FK_OK = 0,
  FK_ERR_INVALID_ARGUMENT = 1,
  FK_ERR_PARSE = 2,
  FK_ERR_NOT_A_FRAME = 3,
  FK_ERR_NOT_CONNECTED = 4,
  FK_ERR_NOT_EQUIVALENT = 5,
  FK_ERR_NOT_PARSEVAL = 6,
  FK_ERR_NUMERIC = 7,     /* convergence failure / degenerate canonical form */
  FK_ERR_DIMENSION = 8,   /* dimension or node mismatch */
  FK_ERR_DOMAIN = 9       /* other domain-invariant violation */
} fk_status;

const char* fk_version(void);

/* Message for the last failure on this thread; empty string if none. */
const char* fk_last_error(void);

/* ---- frames ---- */

fk_status fk_frame_parse_json(const char* text, fk_frame** out);
/* JSON text; free with fk_string_release. */
fk_status fk_frame_emit_json(const fk_frame* f, char** out);
void fk_frame_release(fk_frame* f);
void fk_string_release(char* s);

int fk_frame_dim(const fk_frame* f);
int fk_frame_count(const fk_frame* f);
int fk_frame_is_sampled(const fk_frame* f);

typedef struct fk_report {
  double lower_bound_a;
  double upper_bound_b;
  int is_parseval;
  double condition;
} fk_report;

/* tol < 0 selects the kind-dependent default Parseval tolerance. */
fk_status fk_frame_analyze(const fk_frame* f, double tol, fk_report* out);

/* Singular values of the weighted frame matrix, nonincreasing. `buf` must
 * hold fk_frame_dim(f) doubles. */
fk_status fk_frame_singular_values(const fk_frame* f, double* buf);

fk_status fk_frame_parsevalize(const fk_frame* f, fk_frame** out);
fk_status fk_frame_canonical_dual(const fk_frame* f, fk_frame** out);

fk_status fk_frame_factorize(const fk_frame* f, fk_matrix** positive_part,
                             fk_matrix** unitary_part, fk_frame** transversal);

fk_status fk_frame_connecting(const fk_frame* f, const fk_frame* g, double tol,
                              fk_matrix** out);
fk_status fk_frame_unitary_equivalent(const fk_frame* f, const fk_frame* g,
                                      double tol, fk_matrix** out);

/* ---- matrices ---- */

int fk_matrix_rows(const fk_matrix* m);
int fk_matrix_cols(const fk_matrix* m);
/* `buf` must hold 2 * rows * cols doubles. */
fk_status fk_matrix_copy(const fk_matrix* m, double* buf);
void fk_matrix_release(fk_matrix* m);

/* ---- generators ---- */

fk_status fk_generate_exponential(int dim, int nodes_per_unit, fk_frame** out);
fk_status fk_generate_cos_sin(int dim, int nodes_per_unit, fk_frame** out);
/* cos/i*sin blend of the exponential frame and the sampled standard basis
 * over a second [0,1) grid with nodes_per_unit nodes. */
fk_status fk_generate_tensor(int dim, int nodes_per_unit, fk_frame** out);
/* n rows distributed cyclically over m columns, seeded unit phases. */
fk_status fk_generate_msigma(int count, int dim, uint64_t seed, fk_frame** out);
fk_status fk_generate_random(int count, int dim, uint64_t seed,
                             double condition_target, fk_frame** out);

#ifdef __cplusplus
}
#endif

#endif /* FRAMEKIT_FRAMEKIT_H */
