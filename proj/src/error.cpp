#include "witt/error.hpp"

namespace witt {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotIntegral: return "not-integral";
    case ErrorKind::NotDivisible: return "not-divisible";
    case ErrorKind::PrecisionExhausted: return "precision-exhausted";
    case ErrorKind::RingMismatch: return "ring-mismatch";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::LengthZero: return "length-zero";
    case ErrorKind::DepthExceeded: return "depth-exceeded";
    case ErrorKind::ZeroDepth: return "zero-depth";
    case ErrorKind::InsufficientDepth: return "insufficient-depth";
    case ErrorKind::Incoherent: return "incoherent";
    case ErrorKind::CapabilityMissing: return "capability-missing";
    case ErrorKind::UnsupportedInstance: return "unsupported-instance";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::IntegralityViolation: return "integrality-violation";
    case ErrorKind::NoRoot: return "no-root";
    case ErrorKind::RescaleInfeasible: return "rescale-infeasible";
    case ErrorKind::NotEnumerable: return "not-enumerable";
    case ErrorKind::BOutOfRange: return "b-out-of-range";
    case ErrorKind::UnsupportedField: return "unsupported-field";
    case ErrorKind::UnknownSuite: return "unknown-suite";
    case ErrorKind::MalformedConfig: return "malformed-config";
    case ErrorKind::Parse: return "parse-error";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace witt
