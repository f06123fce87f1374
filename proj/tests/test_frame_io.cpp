#include <doctest.h>

#include <string>

#include "framekit/frame_io.hpp"
#include "framekit/generators.hpp"
#include "framekit/rng.hpp"

using namespace framekit;

namespace {

void check_parse_error(const std::string& text, const std::string& fragment) {
  try {
    parse_frame_file(text);
    FAIL("expected ParseError for: " << text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("minimal one-dimensional file") {
  Frame f = parse_frame_file(
      R"({"kind":"finite","dim":1,"vectors":[[[1,0]]]})");
  CHECK(f.dim() == 1);
  CHECK(f.count() == 1);
  CHECK_FALSE(f.is_sampled());
  CHECK(std::abs(f.vectors()(0, 0) - Complex(1.0)) < 1e-15);
}

TEST_CASE("sampled file with explicit nodes and weights") {
  Frame f = parse_frame_file(
      R"({"kind":"sampled","dim":1,"vectors":[[[1,0]],[[0,1]]],)"
      R"("nodes":[0.25,0.75],"weights":[0.5,0.5]})");
  CHECK(f.is_sampled());
  CHECK(f.nodes()[1] == doctest::Approx(0.75));
  CHECK(f.weights()[0] == doctest::Approx(0.5));
  CHECK(std::abs(f.vectors()(0, 1) - Complex(0.0, 1.0)) < 1e-15);
}

TEST_CASE("emit and parse round trip") {
  Rng rng(91);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 1 + trial % 4;
    const int n = m + trial % 3;
    Frame f = trial % 2 == 0
                  ? Frame::finite(rng.gaussian_matrix(m, n))
                  : exponential_frame(rng.unitary(m), uniform_grid(m, 3 + trial % 5));
    Frame back = parse_frame_file(emit_frame_file(f));
    CHECK(back.dim() == f.dim());
    CHECK(back.count() == f.count());
    CHECK(back.is_sampled() == f.is_sampled());
    CHECK((back.vectors() - f.vectors()).norm() == 0.0);
    if (f.is_sampled()) {
      for (size_t i = 0; i < f.nodes().size(); ++i) {
        CHECK(back.nodes()[i] == f.nodes()[i]);
        CHECK(back.weights()[i] == f.weights()[i]);
      }
    }
  }
}

TEST_CASE("parse errors name the offending field") {
  check_parse_error("not json", "not valid JSON");
  check_parse_error("[1,2]", "top level");
  check_parse_error(R"({"kind":"weird","dim":1,"vectors":[[[1,0]]]})", "kind");
  check_parse_error(R"({"kind":"finite","dim":0,"vectors":[[[1,0]]]})", "dim");
  check_parse_error(R"({"kind":"finite","dim":1,"vectors":[]})", "vectors");
  check_parse_error(R"({"kind":"finite","dim":2,"vectors":[[[1,0]]]})",
                    "vectors[0]");
  check_parse_error(R"({"kind":"finite","dim":1,"vectors":[[[1]]]})",
                    "[re, im]");
  check_parse_error(
      R"({"kind":"finite","dim":1,"vectors":[[[1,0]]],"weights":[1]})",
      "finite frames");
  check_parse_error(
      R"({"kind":"sampled","dim":1,"vectors":[[[1,0]]],"nodes":[0.5]})",
      "weights");
  check_parse_error(
      R"({"kind":"sampled","dim":1,"vectors":[[[1,0]],[[0,1]]],)"
      R"("nodes":[0.25,0.75],"weights":[0.5,0]})",
      "weights[1]");
}

TEST_CASE("well-formed files can still fail the frame condition") {
  // Two copies of e1 in C^2 never span, whatever the file says.
  try {
    parse_frame_file(
        R"({"kind":"finite","dim":2,"vectors":[[[1,0],[0,0]],[[1,0],[0,0]]]})");
    FAIL("expected NotAFrame");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAFrame);
  }
}
