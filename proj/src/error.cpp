#include "pengu/error.hpp"

namespace pengu {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateAxiom: return "DuplicateAxiom";
    case ErrorKind::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorKind::UnknownAxiomId: return "UnknownAxiomId";
    case ErrorKind::FreshAxiomPresent: return "FreshAxiomPresent";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoRepair: return "NoRepair";
    case ErrorKind::ForeignRef: return "ForeignRef";
    case ErrorKind::UnmappedAxiom: return "UnmappedAxiom";
    case ErrorKind::MissingWeight: return "MissingWeight";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace pengu
