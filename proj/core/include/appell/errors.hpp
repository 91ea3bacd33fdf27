#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace appell {

enum class ErrorKind {
  DivisionByZero,
  ParseError,
  DimensionMismatch,
  ZeroScale,
  SingularMatrix,
  NotInvertible,
  DomainError,
  InvalidFamily,
  IdentityViolation,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to a stable exit status.
class AppellError : public std::runtime_error {
 public:
  AppellError(ErrorKind kind, const std::string& what,
              std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Offending position, when one exists (first zero pivot for
  /// SingularMatrix).
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace appell
