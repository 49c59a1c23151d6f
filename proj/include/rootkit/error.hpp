#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rootkit {

enum class ErrorCode {
  ParseError,
  InadmissibleRank,
  NotARoot,
  NotPositiveRoot,
  BadIndex,
  NonIntegralSolution,
  NotSpecial,
  NotLong,
  MultiplicityZero,
  NeitherSpecialNorCospecial,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the engine carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rootkit
