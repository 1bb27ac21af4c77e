#pragma once

#include <stdexcept>
#include <string>

namespace witt {

enum class ErrorKind {
  NotIntegral,
  NotDivisible,
  PrecisionExhausted,
  RingMismatch,
  LengthMismatch,
  LengthZero,
  DepthExceeded,
  ZeroDepth,
  InsufficientDepth,
  Incoherent,
  CapabilityMissing,
  UnsupportedInstance,
  Unsupported,
  IntegralityViolation,
  NoRoot,
  RescaleInfeasible,
  NotEnumerable,
  BOutOfRange,
  UnsupportedField,
  UnknownSuite,
  MalformedConfig,
  Parse,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace witt
