#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace deltalim {

enum class ErrorKind {
  InvalidArgument,
  NonConvergence,
  BracketScanTooCoarse,
  DegenerateProfile,
  SingularWronskian,
  QuadratureFailure,
  OverflowGuard,
  NotAResonance,
  NotResonant,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Short %g rendering of a number for error messages.
std::string num(double v);

/// Domain error raised by every module. `kind()` is stable and is what the
/// CLI reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace deltalim
