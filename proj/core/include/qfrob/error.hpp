#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qfrob {

/// Failure categories surfaced to callers and mapped onto CLI exit codes.
enum class ErrorKind {
  InvalidArgument,     ///< malformed input (non-prime modulus, size mismatch, ...)
  Unsupported,         ///< p = 2 or m <= 1 in a flow that needs p >= 3, m >= 2
  Degenerate,          ///< exact solve could not pin down multiplicities
  Inconsistent,        ///< two independent computations disagree
  Malformed,           ///< structural invariant (e.g. rank balance) violated
  PreconditionFailed,  ///< input violates an operation's precondition
  SearchExhausted,     ///< enumeration bound reached without a result
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace qfrob
