#pragma once

#include <stdexcept>
#include <string>

namespace rminor {

/// Raised on contract violations: unknown ids, malformed inputs, bad queries.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a minor search exceeds its node-expansion cap.
class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace rminor
