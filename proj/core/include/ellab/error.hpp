#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellab {

enum class ErrorCode {
  MalformedInput,
  SumNot12,
  TooFewFibers,
  NotPrime,
  UnsupportedPrime,
  NotInCatalog,
  ConflictingLabels,
  SideMismatch,
  MissingFlag,
  HypothesesNotMet,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ellab
