#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace entcat {

enum class ErrorKind {
  EmptyInput,
  NonPositiveEntry,
  NotNormalized,
  MalformedNumber,
  ResourceLimit,
  IndexOutOfRange,
  DimensionMismatch,
  NoSearchNeeded,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace entcat
