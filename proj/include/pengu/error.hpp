#pragma once

#include <stdexcept>
#include <string>

namespace pengu {

enum class ErrorKind {
  DuplicateAxiom,
  ProbabilityOutOfRange,
  UnknownAxiomId,
  FreshAxiomPresent,
  ResourceLimit,
  TooLarge,
  NoRepair,
  ForeignRef,
  UnmappedAxiom,
  MissingWeight,
  InvariantViolation,
};

const char* to_string(ErrorKind kind);

/// Base error for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pengu
