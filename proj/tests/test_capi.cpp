#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "framekit/framekit.h"

namespace {

struct FrameGuard {
  fk_frame* ptr = nullptr;
  ~FrameGuard() { fk_frame_release(ptr); }
};

struct MatrixGuard {
  fk_matrix* ptr = nullptr;
  ~MatrixGuard() { fk_matrix_release(ptr); }
};

const char* kDoubledBasis =
    R"({"kind":"finite","dim":2,"vectors":[[[1,0],[0,0]],[[1,0],[0,0]],[[0,0],[1,0]]]})";

std::vector<double> copy_matrix(const fk_matrix* m) {
  std::vector<double> buf(size_t(2 * fk_matrix_rows(m) * fk_matrix_cols(m)));
  REQUIRE(fk_matrix_copy(m, buf.data()) == FK_OK);
  return buf;
}

}  // namespace

TEST_CASE("version string is present") {
  REQUIRE(fk_version() != nullptr);
  CHECK(std::strlen(fk_version()) > 0);
}

TEST_CASE("parse, inspect, analyze and emit") {
  FrameGuard f;
  REQUIRE(fk_frame_parse_json(kDoubledBasis, &f.ptr) == FK_OK);
  CHECK(fk_frame_dim(f.ptr) == 2);
  CHECK(fk_frame_count(f.ptr) == 3);
  CHECK(fk_frame_is_sampled(f.ptr) == 0);

  fk_report report{};
  REQUIRE(fk_frame_analyze(f.ptr, -1.0, &report) == FK_OK);
  CHECK(report.lower_bound_a == doctest::Approx(1.0));
  CHECK(report.upper_bound_b == doctest::Approx(2.0));
  CHECK(report.condition == doctest::Approx(2.0));
  CHECK(report.is_parseval == 0);

  double sv[2] = {0.0, 0.0};
  REQUIRE(fk_frame_singular_values(f.ptr, sv) == FK_OK);
  CHECK(sv[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(sv[1] == doctest::Approx(1.0));

  char* text = nullptr;
  REQUIRE(fk_frame_emit_json(f.ptr, &text) == FK_OK);
  REQUIRE(text != nullptr);
  FrameGuard back;
  CHECK(fk_frame_parse_json(text, &back.ptr) == FK_OK);
  CHECK(fk_frame_count(back.ptr) == 3);
  fk_string_release(text);
}

TEST_CASE("parse failures set a message") {
  fk_frame* f = nullptr;
  CHECK(fk_frame_parse_json("nope", &f) == FK_ERR_PARSE);
  CHECK(std::string(fk_last_error()).find("JSON") != std::string::npos);
  CHECK(f == nullptr);

  CHECK(fk_frame_parse_json(nullptr, &f) == FK_ERR_INVALID_ARGUMENT);

  const char* degenerate =
      R"({"kind":"finite","dim":2,"vectors":[[[1,0],[0,0]],[[1,0],[0,0]]]})";
  CHECK(fk_frame_parse_json(degenerate, &f) == FK_ERR_NOT_A_FRAME);
}

TEST_CASE("generators produce the advertised frames") {
  FrameGuard exp_frame;
  REQUIRE(fk_generate_exponential(2, 8, &exp_frame.ptr) == FK_OK);
  CHECK(fk_frame_is_sampled(exp_frame.ptr) == 1);
  CHECK(fk_frame_count(exp_frame.ptr) == 16);
  fk_report report{};
  REQUIRE(fk_frame_analyze(exp_frame.ptr, -1.0, &report) == FK_OK);
  CHECK(report.is_parseval == 1);

  FrameGuard cs;
  REQUIRE(fk_generate_cos_sin(2, 8, &cs.ptr) == FK_OK);
  REQUIRE(fk_frame_analyze(cs.ptr, -1.0, &report) == FK_OK);
  CHECK(report.is_parseval == 1);

  fk_frame* coarse = nullptr;
  CHECK(fk_generate_cos_sin(2, 2, &coarse) == FK_ERR_DOMAIN);

  FrameGuard tensor;
  REQUIRE(fk_generate_tensor(2, 8, &tensor.ptr) == FK_OK);
  REQUIRE(fk_frame_analyze(tensor.ptr, -1.0, &report) == FK_OK);
  CHECK(report.is_parseval == 1);

  FrameGuard msigma;
  REQUIRE(fk_generate_msigma(5, 2, 3, &msigma.ptr) == FK_OK);
  REQUIRE(fk_frame_analyze(msigma.ptr, -1.0, &report) == FK_OK);
  CHECK(report.is_parseval == 1);

  FrameGuard rnd;
  REQUIRE(fk_generate_random(8, 4, 7, 100.0, &rnd.ptr) == FK_OK);
  REQUIRE(fk_frame_analyze(rnd.ptr, -1.0, &report) == FK_OK);
  CHECK(report.condition == doctest::Approx(100.0));
}

TEST_CASE("parsevalize and canonical dual round trip through handles") {
  FrameGuard f;
  REQUIRE(fk_frame_parse_json(kDoubledBasis, &f.ptr) == FK_OK);

  FrameGuard t;
  REQUIRE(fk_frame_parsevalize(f.ptr, &t.ptr) == FK_OK);
  fk_report report{};
  REQUIRE(fk_frame_analyze(t.ptr, -1.0, &report) == FK_OK);
  CHECK(report.is_parseval == 1);

  FrameGuard dual;
  REQUIRE(fk_frame_canonical_dual(f.ptr, &dual.ptr) == FK_OK);
  char* text = nullptr;
  REQUIRE(fk_frame_emit_json(dual.ptr, &text) == FK_OK);
  CHECK(std::string(text).find("0.5") != std::string::npos);
  fk_string_release(text);
}

TEST_CASE("factorize returns three coherent parts") {
  FrameGuard f;
  REQUIRE(fk_frame_parse_json(kDoubledBasis, &f.ptr) == FK_OK);
  MatrixGuard positive, unitary;
  FrameGuard transversal;
  REQUIRE(fk_frame_factorize(f.ptr, &positive.ptr, &unitary.ptr,
                             &transversal.ptr) == FK_OK);
  CHECK(fk_matrix_rows(positive.ptr) == 2);
  CHECK(fk_matrix_cols(positive.ptr) == 2);
  std::vector<double> p = copy_matrix(positive.ptr);
  CHECK(p[0] == doctest::Approx(std::sqrt(2.0)));  // (0,0) re
  CHECK(p[1] == doctest::Approx(0.0));             // (0,0) im
  CHECK(p[6] == doctest::Approx(1.0));             // (1,1) re

  fk_report report{};
  REQUIRE(fk_frame_analyze(transversal.ptr, -1.0, &report) == FK_OK);
  CHECK(report.is_parseval == 1);
}

TEST_CASE("connecting and equivalence statuses") {
  FrameGuard f;
  REQUIRE(fk_frame_parse_json(kDoubledBasis, &f.ptr) == FK_OK);
  MatrixGuard self;
  REQUIRE(fk_frame_connecting(f.ptr, f.ptr, 1e-8, &self.ptr) == FK_OK);
  std::vector<double> a = copy_matrix(self.ptr);
  CHECK(a[0] == doctest::Approx(1.0));
  CHECK(a[2] == doctest::Approx(0.0));

  // {e1, e2, e2} sits on a different orbit.
  const char* other =
      R"({"kind":"finite","dim":2,"vectors":[[[1,0],[0,0]],[[0,0],[1,0]],[[0,0],[1,0]]]})";
  FrameGuard g;
  REQUIRE(fk_frame_parse_json(other, &g.ptr) == FK_OK);
  fk_matrix* none = nullptr;
  CHECK(fk_frame_connecting(f.ptr, g.ptr, 1e-8, &none) ==
        FK_ERR_NOT_CONNECTED);
  CHECK(none == nullptr);
  CHECK(std::strlen(fk_last_error()) > 0);

  // Unitary equivalence needs Parseval inputs.
  CHECK(fk_frame_unitary_equivalent(f.ptr, f.ptr, 1e-8, &none) ==
        FK_ERR_NOT_PARSEVAL);

  FrameGuard tf, tg;
  REQUIRE(fk_frame_parsevalize(f.ptr, &tf.ptr) == FK_OK);
  REQUIRE(fk_frame_parsevalize(g.ptr, &tg.ptr) == FK_OK);
  MatrixGuard u;
  CHECK(fk_frame_unitary_equivalent(tf.ptr, tf.ptr, 1e-8, &u.ptr) == FK_OK);
  CHECK(fk_frame_unitary_equivalent(tf.ptr, tg.ptr, 1e-8, &none) ==
        FK_ERR_NOT_EQUIVALENT);
}
