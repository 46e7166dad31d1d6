#pragma once

#include <stdexcept>
#include <string>

namespace lonely {

/// Raised when an argument violates an operation's precondition
/// (malformed partition text, a non-singleton passed to a merge, a crossing
/// partition where a noncrossing one is required, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds a declared resource ceiling, e.g. asking the
/// brute-force oracles for an n they cannot finish in reasonable time.
class CeilingExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Internal consistency failure. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

[[noreturn]] inline void fail_ceiling(const char* what, int n, int ceiling) {
  throw CeilingExceeded(std::string(what) + ": n=" + std::to_string(n) +
                        " exceeds ceiling " + std::to_string(ceiling));
}

}  // namespace detail
}  // namespace lonely
