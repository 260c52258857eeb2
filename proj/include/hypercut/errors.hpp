#pragma once

#include <stdexcept>
#include <string>

namespace hypercut {

enum class ErrorCode {
  EmptyEdge,
  VertexOutOfRange,
  DuplicateVertexInEdge,
  ZeroDegreeVertex,
  NotClassical,
  NotConnected,
  NotUniform,
  NotRegular,
  DegreeAssumptionViolated,
  TooLarge,
  InvalidCut,
  ZeroFunction,
  DegenerateFunction,
  NoConvergence,
  ParseError,
  GenerationFailed,
  UsageError,
};

const char* error_name(ErrorCode code);

/// Process exit status the CLI uses for each error class:
/// 2 input/parse, 3 precondition, 4 size/limit, 5 numerical non-convergence.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace hypercut
