#pragma once

#include <stdexcept>
#include <string>

namespace fda {

// Every failure the library reports, tagged with the condition name used
// in diagnostics and mapped onto C API status codes.
enum class ErrorCode {
  Syntax,
  UnknownLabel,
  HoleCount,
  AlphabetMismatch,
  KindMismatch,
  SpecInvalid,
  SizeLimit,
  NotReachableRestricted,
  ElementUnrealized,
  UnboundVariable,
  ForeignNode,
  NotPrenex,
  NotDA,
  NotStratified,
  IdentityFails,
  NotFound,
  Arg,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace fda
