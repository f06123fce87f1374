#pragma once

#include <stdexcept>
#include <string>

namespace framekit {

enum class ErrorCode {
  InvalidArgument,
  NonFiniteInput,
  ConvergenceFailure,
  NotHermitian,
  NotPositive,
  NotInvertible,
  NotUnitary,
  NotAFrame,
  DimensionMismatch,
  NodeMismatch,
  NotParseval,
  DegenerateCanonicalForm,
  NotOrthonormal,
  NotOrthonormalFamily,
  GridMismatch,
  GridTooCoarse,
  ColumnNotUnit,
  EmptyColumn,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace framekit
