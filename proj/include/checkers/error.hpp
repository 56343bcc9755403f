#pragma once

#include <stdexcept>
#include <string>

namespace checkers {

enum class ErrorCode {
  InvalidArgument = 1,
  OutOfDomain = 2,
  NotConverged = 3,
  Infeasible = 4,
  SizeLimit = 5,
  ZeroDenominator = 6,
};

/// Exception type thrown by every module of the core library. The C API
/// translates the code into an fc_status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const char* what) {
  if (!cond) fail(code, what);
}

}  // namespace checkers
