#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace assocloc {

enum class ErrorCode {
  Shape,
  NotPrime,
  Parse,
  NonAssociative,
  BadUnit,
  NotAnIdeal,
  UnitInIdeal,
  RelationViolated,
  UnitNotIdentity,
  ZeroModule,
  NotAUnit,
  MeataxeInconclusive,
  NonSimpleSummand,
  ZeroDivisorFound,
  KernelNotContained,
  DenominatorNotUnit,
  NotWellDefined,
  LayoutMismatch,
  NotCommutative,
  NotMaximal,
  PullbackMismatch,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for the library; `code` identifies the failure and
// `details` lists individual violations when a validator finds several.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::string> details = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorCode code_;
  std::vector<std::string> details_;
};

}  // namespace assocloc
