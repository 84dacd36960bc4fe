#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liecat {

enum class ErrorKind {
  NonFinite,
  DomainExit,
  InvalidMorphism,
  InvalidObject,
  NotComposable,
  InvalidResult,
  SamplerUnavailable,
  NotInvertible,
  OutwardVector,
  NotHomomorphism,
  InvalidConfiguration,
  DimensionMismatch,
  BadDimension,
  BoundaryConfiguration,
  ProjectionResidual,
  Unsupported,
  InvalidSpec,
};

/// Stable name used in CLI reports (`error=<name>`).
std::string_view to_string(ErrorKind kind);

/// True for errors caused by malformed input files or arguments rather than
/// by the mathematics of the request.
bool is_validation_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when an integration leaves the domain; carries the last time at
/// which the trajectory was still valid.
class DomainExitError : public Error {
 public:
  DomainExitError(double t_exit, const std::string& what)
      : Error(ErrorKind::DomainExit, what), t_exit_(t_exit) {}

  double t_exit() const noexcept { return t_exit_; }

 private:
  double t_exit_;
};

}  // namespace liecat
