#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chaintutte {

enum class ErrorKind {
  InvalidParameters,
  NotAMatroid,
  NotAPolymatroid,
  OutOfRange,
  Unsupported,
  Domain,
  BudgetExceeded,
  Parse,
  InconsistentNerve,
  UnknownInvariant,
  Internal,
};

/// Machine-readable name, e.g. "budget-exceeded".
std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace chaintutte
