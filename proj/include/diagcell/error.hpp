#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diagcell {

enum class ErrorCode {
  NonSquare,
  DivisionNotExact,
  Parse,
  InvalidSemigroup,
  NotIdempotent,
  RankMismatch,
  RankTooLarge,
  BadParameter,
  NoSuchRepresentative,
  DegreeMismatch,
  SupportOutOfDomain,
  UnknownLambda,
  C3Violation,
  InconsistentForm,
  ValidationFailed,
  SizeMismatch,
  NoStarFixedIdempotent,
  NotRegular,
  UnsupportedGroup,
  ModePreconditionFailed,
  AlphaNotUnit,
  NotAModule,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Outcome of a validation scan. `witness` names the first failing instance.
struct CheckReport {
  std::string check;
  bool ok = true;
  std::string witness;

  static CheckReport pass(std::string name) { return {std::move(name), true, {}}; }
  static CheckReport fail(std::string name, std::string w) {
    return {std::move(name), false, std::move(w)};
  }
  explicit operator bool() const { return ok; }
};

}  // namespace diagcell
