#pragma once

// JSON frame-file format.
//
// {
//   "kind": "finite" | "sampled",
//   "dim": m,
//   "vectors": [ [ [re, im], ... m entries ], ... one per index ],
//   "nodes":   [ ... ]   (sampled only)
//   "weights": [ ... ]   (sampled only)
// }
//
// Complex numbers are always [re, im] pairs of IEEE doubles.

#include <string>

#include "framekit/frame.hpp"

namespace framekit {

// Throws Error(ParseError) with field context for malformed input, and the
// usual frame-invariant errors (NotAFrame, ...) for well-formed files
// describing invalid frames.
Frame parse_frame_file(const std::string& text);

// Shortest-round-trip decimal formatting; parse(emit(f)) reproduces f.
std::string emit_frame_file(const Frame& f);

}  // namespace framekit
