#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sixeq {

enum class ErrorKind {
  InvalidInput,
  InadmissibleState,
  DegenerateFan,
  Positivity,
  RelaxationFailure,
  Vacuum,
  NoConvergence,
  Config,
  Io,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

// Where and when a run stopped. Filled by the solver; absent for errors that
// are not tied to a cell.
struct FailureRecord {
  std::size_t step = 0;
  double time = 0.0;
  std::size_t cell = 0;  // linear index (i + nx * j)
  std::size_t i = 0;
  std::size_t j = 0;
  std::string field;
  std::string scheme;
  std::string detail;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  Error(ErrorKind kind, const std::string& message, FailureRecord record);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<FailureRecord>& record() const noexcept { return record_; }

 private:
  ErrorKind kind_;
  std::optional<FailureRecord> record_;
};

}  // namespace sixeq
