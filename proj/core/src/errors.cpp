#include "appell/errors.hpp"

namespace appell {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
  }
  return "Unknown";
}

}  // namespace appell
