#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace commdeg {

enum class ErrorCode {
  NotLatin,
  NonAssociative,
  NotIdentity,
  OrderCapExceeded,
  InvalidAction,
  IndexOutOfRange,
  NotNormal,
  NotSubgroup,
  NotHomomorphism,
  NotPrime,
  AntitoneViolation,
  IncompatibleSelector,
  IncompatiblePath,
  WeightMismatch,
  NonConvergence,
  ModulusViolation,
  UnknownPreset,
  PresetMismatch,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace commdeg
