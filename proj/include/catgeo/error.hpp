#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catgeo {

enum class ErrorCode {
  ParseError,
  InvalidPresentation,
  DuplicateId,
  NontrivialCycle,
  CyclicGraph,
  AxiomViolation,
  UnknownArrow,
  NotComposable,
  Undefined,
  CompositeIsIdentity,
  NotGenerated,
  NoDifference,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// C API and the CLI map them to status values and exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace catgeo
