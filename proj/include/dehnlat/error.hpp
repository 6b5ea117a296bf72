#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dehnlat {

enum class ErrorKind {
  NotSymmetric,
  NotPositiveDefinite,
  NotCoprime,
  IndexOutOfRange,
  AsymmetricAlexander,
  NotNormalized,
  MissingVData,
  VInvariantViolated,
  DeterminantMismatch,
  NonCyclicDiscriminant,
  AssertionViolated,
  InvalidArgument,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::AsymmetricAlexander: return "AsymmetricAlexander";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::MissingVData: return "MissingVData";
    case ErrorKind::VInvariantViolated: return "VInvariantViolated";
    case ErrorKind::DeterminantMismatch: return "DeterminantMismatch";
    case ErrorKind::NonCyclicDiscriminant: return "NonCyclicDiscriminant";
    case ErrorKind::AssertionViolated: return "AssertionViolated";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dehnlat
