#include "framekit/frame_io.hpp"

#include <cmath>

#include <json.hpp>

namespace framekit {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& context) {
  raise(ErrorCode::ParseError, "frame file: " + context);
}

double number_at(const json& j, const std::string& context) {
  if (!j.is_number()) parse_fail(context + " must be a number");
  return j.get<double>();
}

Complex complex_at(const json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 2) {
    parse_fail(context + " must be a [re, im] pair");
  }
  return Complex(number_at(j[0], context + "[0]"),
                 number_at(j[1], context + "[1]"));
}

}  // namespace

Frame parse_frame_file(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) parse_fail("not valid JSON");
  if (!doc.is_object()) parse_fail("top level must be an object");

  const std::string kind = doc.value("kind", "");
  if (kind != "finite" && kind != "sampled") {
    parse_fail("field 'kind' must be \"finite\" or \"sampled\"");
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() ||
      doc["dim"].get<int>() < 1) {
    parse_fail("field 'dim' must be a positive integer");
  }
  const int m = doc["dim"].get<int>();

  if (!doc.contains("vectors") || !doc["vectors"].is_array() ||
      doc["vectors"].empty()) {
    parse_fail("field 'vectors' must be a non-empty array");
  }
  const auto& vecs = doc["vectors"];
  const int n = int(vecs.size());
  Matrix vectors(m, n);
  for (int i = 0; i < n; ++i) {
    const auto& v = vecs[size_t(i)];
    if (!v.is_array() || int(v.size()) != m) {
      parse_fail("vectors[" + std::to_string(i) + "] must hold " +
                 std::to_string(m) + " complex entries");
    }
    for (int r = 0; r < m; ++r) {
      vectors(r, i) = complex_at(
          v[size_t(r)],
          "vectors[" + std::to_string(i) + "][" + std::to_string(r) + "]");
    }
  }

  if (kind == "finite") {
    if (doc.contains("nodes") || doc.contains("weights")) {
      parse_fail("finite frames carry no 'nodes' or 'weights'");
    }
    return Frame::finite(std::move(vectors));
  }

  for (const char* field : {"nodes", "weights"}) {
    if (!doc.contains(field) || !doc[field].is_array() ||
        int(doc[field].size()) != n) {
      parse_fail(std::string("field '") + field + "' must list one value per vector");
    }
  }
  std::vector<double> nodes, weights;
  nodes.reserve(size_t(n));
  weights.reserve(size_t(n));
  for (int i = 0; i < n; ++i) {
    nodes.push_back(number_at(doc["nodes"][size_t(i)],
                              "nodes[" + std::to_string(i) + "]"));
    const double w = number_at(doc["weights"][size_t(i)],
                               "weights[" + std::to_string(i) + "]");
    if (!(w > 0.0) || !std::isfinite(w)) {
      parse_fail("weights[" + std::to_string(i) + "] must be positive");
    }
    weights.push_back(w);
  }
  return Frame::sampled(std::move(vectors), std::move(nodes),
                        std::move(weights));
}

std::string emit_frame_file(const Frame& f) {
  json doc;
  doc["kind"] = f.is_sampled() ? "sampled" : "finite";
  doc["dim"] = f.dim();
  json vecs = json::array();
  for (int i = 0; i < f.count(); ++i) {
    json v = json::array();
    for (int r = 0; r < f.dim(); ++r) {
      const Complex z = f.vectors()(r, i);
      v.push_back(json::array({z.real(), z.imag()}));
    }
    vecs.push_back(std::move(v));
  }
  doc["vectors"] = std::move(vecs);
  if (f.is_sampled()) {
    doc["nodes"] = f.nodes();
    doc["weights"] = f.weights();
  }
  return doc.dump();
}

}  // namespace framekit
