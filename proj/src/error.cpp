#include "sixeq/error.hpp"

#include <utility>

namespace sixeq {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::InadmissibleState: return "inadmissible-state";
    case ErrorKind::DegenerateFan: return "degenerate-fan";
    case ErrorKind::Positivity: return "positivity";
    case ErrorKind::RelaxationFailure: return "relaxation-failure";
    case ErrorKind::Vacuum: return "vacuum";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::Config: return "config";
    case ErrorKind::Io: return "io";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, FailureRecord record)
    : std::runtime_error(message), kind_(kind), record_(std::move(record)) {}

}  // namespace sixeq
