#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace okbody {

/// Failure categories surfaced by the engine. The CLI maps each category to a
/// process exit code (see exit_code).
enum class ErrorCode {
  InvalidInput,          // malformed or out-of-contract input
  NotNef,                // operation requires a nef class
  NotInterior,           // weight outside the relative interior of the weight polytope
  NonIntegralAll,        // no sampled level makes k*mu integral
  SpanDeficiency,        // products of cell polynomials do not span H^0
  BoxTooSmall,           // glue solve changed when the degree box grew
  Unstable,              // glue solve never stabilised below the box cap
  ChamberResolutionFailure,
  VerificationFailure,   // an internal cross-check between two routes failed
  NoMatch,
  Ambiguous,
  NotAffine,
  Internal,              // arithmetic bug, never valid input
};

std::string_view to_string(ErrorCode code);

/// 0 ok, 2 invalid input, 3 computational instability, 4 verification failure.
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace okbody
