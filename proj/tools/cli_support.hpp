#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qhall::cli {

enum ExitCode : int { kOk = 0, kStrictFailure = 1, kUsage = 2, kNumerical = 3 };

/// Raised for invalid or missing flags; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact value of "7", "-3/4", "10.5" or "2.5e-3".
mpq_class parse_rational(const std::string& text);

struct IntRange {
  long first = 0;
  long last = 0;
};

/// "3" or "0..4" (inclusive).
IntRange parse_range(const std::string& text);

}  // namespace qhall::cli
