#ifndef BITILE_ERROR_HPP
#define BITILE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bitile {

// Domain error codes. Shared by the C++ exceptions, the C API status
// values and the CLI's error JSON.
enum class ErrorCode {
  Ok = 0,
  NotBipartite,
  Unbalanced,
  EdgeWithinSide,
  EmptySubset,
  EdgelessPattern,
  HcfNotOne,
  DivisibilityViolation,
  NoCaseApplies,
  InstanceTooLarge,
  PreconditionViolated,
  RatioViolation,
  BudgetExceeded,
  NotExtremal,
  HypothesesUnmet,
  SearchFailed,
  EmbedFailed,
  PipelineStageFailed,
  TooLargeForExact,
  InvalidArgument,
  IoError,
  ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail, std::string stage = {})
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)),
        stage_(std::move(stage)) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }
  const std::string& stage() const { return stage_; }

 private:
  ErrorCode code_;
  std::string detail_;
  std::string stage_;
};

}  // namespace bitile

#endif
