#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conicgin {

enum class ErrorKind {
  ZeroInverse,
  DegenerateInput,
  CharacteristicHazard,
  GenericityFailure,
  MalformedHVector,
  DomainError,
  UnsupportedCase,
  EmptyTable,
  InvalidConfig,
};

inline std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::CharacteristicHazard: return "CharacteristicHazard";
    case ErrorKind::GenericityFailure: return "GenericityFailure";
    case ErrorKind::MalformedHVector: return "MalformedHVector";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
    case ErrorKind::EmptyTable: return "EmptyTable";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

/**
 * Every failure raised by the library carries one of the kinds above so that
 * callers (the CLI in particular) can report it by name.
 */
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace conicgin
