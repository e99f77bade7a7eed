#pragma once

#include <stdexcept>
#include <string>

namespace lukatree {

enum class ErrorCode {
  DuplicateLetter = 1,
  FirstDegreeNotMinusOne,
  DegreesNotSorted,
  DegreeBelowMinusOne,
  ArityMismatch,
  NotAValidWord,
  NotAPermutation,
  TupleNotValid,
  DomainTooSmall,
  LimitExceeded,
  EmptySupport,
  InfeasibleParity,
  ParseError,
  InvalidArgument,
  BitsExhausted,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto lt_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace lukatree
