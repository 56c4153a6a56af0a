#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdindex {

enum class ErrorKind {
  CycleDetected,
  NotGraded,
  RequiresBounds,
  RequiresMin,
  MissingBounds,
  NotNearEulerian,
  NotALattice,
  NotCdExpressible,
  DegreeTooHigh,
  RankTooLarge,
  DomainError,
  FaceNotFound,
  NotPure,
  InvalidSubdivision,
  InvalidChain,
  NotLowerEulerian,
  IdentityViolated,
  ValidationRequired,
  ConventionMismatch,
  UnknownElement,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this type; `kind` drives the
// CLI exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace cdindex
