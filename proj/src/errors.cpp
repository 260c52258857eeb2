#include "hypercut/errors.hpp"

namespace hypercut {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyEdge: return "EmptyEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DuplicateVertexInEdge: return "DuplicateVertexInEdge";
    case ErrorCode::ZeroDegreeVertex: return "ZeroDegreeVertex";
    case ErrorCode::NotClassical: return "NotClassical";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::DegreeAssumptionViolated: return "DegreeAssumptionViolated";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidCut: return "InvalidCut";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::DegenerateFunction: return "DegenerateFunction";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "UnknownError";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyEdge:
    case ErrorCode::VertexOutOfRange:
    case ErrorCode::DuplicateVertexInEdge:
    case ErrorCode::ParseError:
    case ErrorCode::UsageError:
      return 2;
    case ErrorCode::ZeroDegreeVertex:
    case ErrorCode::NotClassical:
    case ErrorCode::NotConnected:
    case ErrorCode::NotUniform:
    case ErrorCode::NotRegular:
    case ErrorCode::DegreeAssumptionViolated:
    case ErrorCode::InvalidCut:
    case ErrorCode::ZeroFunction:
    case ErrorCode::DegenerateFunction:
      return 3;
    case ErrorCode::TooLarge:
    case ErrorCode::GenerationFailed:
      return 4;
    case ErrorCode::NoConvergence:
      return 5;
  }
  return 1;
}

}  // namespace hypercut
