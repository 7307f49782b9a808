#pragma once

#include <stdexcept>
#include <string>

namespace levdom {

enum class ErrorKind {
  InvalidParameters,
  InvalidVertex,
  InvalidInput,
  InvalidParts,
  OutOfRange,
  Overflow,
  TooLarge,
  BudgetExceeded,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace levdom
