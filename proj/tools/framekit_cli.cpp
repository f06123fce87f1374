// Command-line front end for the frame toolkit. Talks to the shared library
// exclusively through the C API; frames travel as JSON frame files and
// results as JSON reports on standard output.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "framekit/framekit.h"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 2 usage/parse, 3 not a frame, 4 not
// connected/equivalent, 5 numeric failure.
int exit_code_for(fk_status status) {
  switch (status) {
    case FK_OK: return 0;
    case FK_ERR_NOT_A_FRAME: return 3;
    case FK_ERR_NOT_CONNECTED:
    case FK_ERR_NOT_EQUIVALENT: return 4;
    case FK_ERR_NUMERIC: return 5;
    default: return 2;
  }
}

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void bail(fk_status status) {
  throw CliError{exit_code_for(status), fk_last_error()};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CliError{2, "cannot open input file: " + path};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw CliError{2, "cannot open output file: " + path};
  }
  out << text << "\n";
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)hash);
  return buf;
}

// RAII wrappers around the C handles.
struct FrameHandle {
  fk_frame* ptr = nullptr;
  ~FrameHandle() { fk_frame_release(ptr); }
};

struct MatrixHandle {
  fk_matrix* ptr = nullptr;
  ~MatrixHandle() { fk_matrix_release(ptr); }
};

FrameHandle parse_frame(const std::string& text) {
  FrameHandle frame;
  fk_status status = fk_frame_parse_json(text.c_str(), &frame.ptr);
  if (status != FK_OK) {
    std::cerr << "error: " << fk_last_error() << "\n";
    throw CliError{exit_code_for(status), ""};
  }
  return frame;
}

std::string emit_frame(const fk_frame* frame) {
  char* text = nullptr;
  fk_status status = fk_frame_emit_json(frame, &text);
  if (status != FK_OK) bail(status);
  std::string out(text);
  fk_string_release(text);
  return out;
}

json matrix_to_json(const fk_matrix* m) {
  const int rows = fk_matrix_rows(m);
  const int cols = fk_matrix_cols(m);
  std::vector<double> buf(size_t(rows) * cols * 2);
  if (fk_matrix_copy(m, buf.data()) != FK_OK) bail(FK_ERR_NUMERIC);
  json out = json::array();
  size_t k = 0;
  for (int r = 0; r < rows; ++r) {
    json row = json::array();
    for (int c = 0; c < cols; ++c) {
      row.push_back(json::array({buf[k], buf[k + 1]}));
      k += 2;
    }
    out.push_back(std::move(row));
  }
  return out;
}

json analysis_json(const fk_frame* frame, double tol) {
  fk_report report{};
  fk_status status = fk_frame_analyze(frame, tol, &report);
  if (status != FK_OK) bail(status);
  std::vector<double> sv(size_t(fk_frame_dim(frame)));
  status = fk_frame_singular_values(frame, sv.data());
  if (status != FK_OK) bail(status);
  json out;
  out["bounds"] = {{"A", report.lower_bound_a}, {"B", report.upper_bound_b}};
  out["singular_values"] = sv;
  out["is_parseval"] = report.is_parseval != 0;
  out["condition"] = report.condition;
  return out;
}

json base_report(const std::string& command, const std::string& input_bytes) {
  json report;
  report["command"] = command;
  report["input_digest"] = fnv1a_digest(input_bytes);
  report["tool_version"] = fk_version();
  return report;
}

void print_report(const json& report, bool quiet) {
  if (!quiet) std::cout << report.dump() << "\n";
}

struct Options {
  double tol = -1.0;  // negative: library default
  bool quiet = false;
};

int run_analyze(const std::string& in_path, const Options& opt) {
  const std::string bytes = read_input(in_path);
  FrameHandle frame = parse_frame(bytes);
  json report = base_report("analyze", bytes);
  report.update(analysis_json(frame.ptr, opt.tol));
  print_report(report, opt.quiet);
  return 0;
}

int run_transform(const std::string& command, const std::string& in_path,
                  const std::string& out_path, const Options& opt) {
  const std::string bytes = read_input(in_path);
  FrameHandle frame = parse_frame(bytes);
  FrameHandle result;
  fk_status status = (command == "parsevalize")
                         ? fk_frame_parsevalize(frame.ptr, &result.ptr)
                         : fk_frame_canonical_dual(frame.ptr, &result.ptr);
  if (status != FK_OK) bail(status);
  write_output(out_path, emit_frame(result.ptr));
  if (out_path != "-") {
    json report = base_report(command, bytes);
    report.update(analysis_json(result.ptr, opt.tol));
    report["output"] = out_path;
    print_report(report, opt.quiet);
  }
  return 0;
}

int run_factorize(const std::string& in_path, const Options& opt) {
  const std::string bytes = read_input(in_path);
  FrameHandle frame = parse_frame(bytes);
  MatrixHandle positive, unitary;
  FrameHandle transversal;
  fk_status status = fk_frame_factorize(frame.ptr, &positive.ptr, &unitary.ptr,
                                        &transversal.ptr);
  if (status != FK_OK) bail(status);
  json report = base_report("factorize", bytes);
  report.update(analysis_json(frame.ptr, opt.tol));
  report["factorization"] = {
      {"positive_part", matrix_to_json(positive.ptr)},
      {"unitary_part", matrix_to_json(unitary.ptr)},
      {"transversal", json::parse(emit_frame(transversal.ptr))},
  };
  print_report(report, opt.quiet);
  return 0;
}

int run_equiv(const std::string& path_a, const std::string& path_b,
              bool unitary_only, const Options& opt) {
  const std::string bytes_a = read_input(path_a);
  const std::string bytes_b = read_input(path_b);
  FrameHandle a = parse_frame(bytes_a);
  FrameHandle b = parse_frame(bytes_b);
  const double tol = opt.tol < 0.0 ? 1e-8 : opt.tol;

  MatrixHandle op;
  fk_status status =
      unitary_only ? fk_frame_unitary_equivalent(a.ptr, b.ptr, tol, &op.ptr)
                   : fk_frame_connecting(a.ptr, b.ptr, tol, &op.ptr);

  json report = base_report("equiv", bytes_a + bytes_b);
  report.update(analysis_json(a.ptr, opt.tol));
  json block;
  if (status == FK_OK) {
    block["status"] = unitary_only ? "unitarily_equivalent" : "connected";
    block[unitary_only ? "unitary" : "operator"] = matrix_to_json(op.ptr);
  } else if (status == FK_ERR_NOT_CONNECTED ||
             status == FK_ERR_NOT_EQUIVALENT) {
    block["status"] =
        unitary_only ? "not_equivalent" : "not_connected";
    block[unitary_only ? "unitary" : "operator"] = nullptr;
  } else {
    bail(status);
  }
  report["equivalence"] = std::move(block);
  print_report(report, opt.quiet);
  return exit_code_for(status);
}

int run_generate(const std::string& kind, int dim, int count,
                 int nodes_per_unit, std::uint64_t seed, double condition,
                 const std::string& out_path) {
  FrameHandle frame;
  fk_status status;
  if (kind == "exp") {
    status = fk_generate_exponential(dim, nodes_per_unit, &frame.ptr);
  } else if (kind == "cossin") {
    status = fk_generate_cos_sin(dim, nodes_per_unit, &frame.ptr);
  } else if (kind == "tensor") {
    status = fk_generate_tensor(dim, nodes_per_unit, &frame.ptr);
  } else if (kind == "msigma") {
    status = fk_generate_msigma(count, dim, seed, &frame.ptr);
  } else if (kind == "random") {
    status = fk_generate_random(count, dim, seed, condition, &frame.ptr);
  } else {
    throw CliError{2, "unknown generator kind: " + kind};
  }
  if (status != FK_OK) bail(status);
  write_output(out_path, emit_frame(frame.ptr));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for finite and sampled frames"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--tol", opt.tol, "Override the default tolerance");
  app.add_flag("--quiet", opt.quiet, "Suppress the report body");

  std::string in_path, in_path_b, out_path = "-";
  bool unitary_only = false;
  std::string gen_kind;
  int dim = 2, count = 4, nodes_per_unit = 8;
  std::uint64_t seed = 1;
  double condition = 1.0;

  auto* analyze = app.add_subcommand("analyze", "Frame bounds and Parseval check");
  analyze->add_option("file", in_path, "Frame file (- for stdin)")->required();

  auto* pars = app.add_subcommand("parsevalize", "Project onto the Parseval frames");
  pars->add_option("file", in_path)->required();
  pars->add_option("-o", out_path, "Output frame file (- for stdout)");

  auto* dual = app.add_subcommand("dual", "Canonical dual frame");
  dual->add_option("file", in_path)->required();
  dual->add_option("-o", out_path, "Output frame file (- for stdout)");

  auto* fact = app.add_subcommand("factorize",
                                  "Positive * unitary * canonical-Parseval factorization");
  fact->add_option("file", in_path)->required();

  auto* equiv = app.add_subcommand("equiv", "Connecting operator between two frames");
  equiv->add_option("fileA", in_path)->required();
  equiv->add_option("fileB", in_path_b)->required();
  equiv->add_flag("--unitary-only", unitary_only,
                  "Require a unitary between Parseval frames");

  auto* gen = app.add_subcommand("generate", "Write an example frame file");
  gen->add_option("kind", gen_kind, "exp|cossin|tensor|msigma|random")->required();
  gen->add_option("--dim", dim, "Dimension m");
  gen->add_option("--count", count, "Number of frame vectors n");
  gen->add_option("--nodes-per-unit", nodes_per_unit, "Quadrature nodes per unit cell");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--condition", condition, "Target condition number B/A");
  gen->add_option("-o", out_path, "Output frame file (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) return run_analyze(in_path, opt);
    if (*pars) return run_transform("parsevalize", in_path, out_path, opt);
    if (*dual) return run_transform("dual", in_path, out_path, opt);
    if (*fact) return run_factorize(in_path, opt);
    if (*equiv) return run_equiv(in_path, in_path_b, unitary_only, opt);
    if (*gen)
      return run_generate(gen_kind, dim, count, nodes_per_unit, seed,
                          condition, out_path);
  } catch (const CliError& e) {
    if (!e.message.empty()) std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return 2;
}
