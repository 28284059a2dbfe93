#pragma once

#include <stdexcept>
#include <string>

namespace cmpgeo {

enum class ErrorKind {
  ParseError,
  InvalidPresentation,
  InvalidRelation,
  InvalidCharacteristic,
  NotFiniteDimensional,
  InvalidRep,
  RelationViolated,
  DimensionMismatch,
  AlgebraMismatch,
  NotAHomomorphism,
  FieldTooSmall,
  Inconclusive,
  OrbitBoundExceeded,
  NotGorenstein,
  InvalidArc,
  NotATriangulation,
  UnsupportedTaggedConfiguration,
  InvalidLabel,
  TypeOther,
  InvariantViolated,
  IncompleteIndecomposableList,
};

// How a failure is reported to the outside world.
enum class ErrorClass { Verification = 1, Input = 2, Limitation = 3 };

const char* error_kind_name(ErrorKind k);
ErrorClass error_class(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool cond, ErrorKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

}  // namespace cmpgeo
