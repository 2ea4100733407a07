#pragma once

#include <stdexcept>
#include <string>

namespace gaussmap {

// Stable error codes, also used verbatim in CLI JSON envelopes.
enum class ErrorCode {
  DegenerateWedge,
  NotSimple,
  DegenerateEdge,
  NonTransversal,
  SharedGreatCircle,
  AntipodalNormals,
  ZeroLengthEdge,
  NeighborOnPlane,
  NotGeneral,
  NotAdmissible,
  InconsistentCycle,
  NoConsistentShift,
  StraightVertex,
  SelfIntersectingGaussImage,
  ZeroCurvature,
  AnchorNotFree,
  Unrealizable,
  InadmissiblePair,
  IdentityViolation,
  DegenerateVertexOnEdge,
  ParseError,
  NonManifold,
  NotClosed,
  InconsistentOrientation,
  NotThreeCritical,
  InvalidInput,
};

const char* error_code_name(ErrorCode code);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw GeometryError(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace gaussmap
