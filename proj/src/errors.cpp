#include "deltalim/errors.hpp"

#include <cstdio>

namespace deltalim {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::BracketScanTooCoarse: return "BracketScanTooCoarse";
    case ErrorKind::DegenerateProfile: return "DegenerateProfile";
    case ErrorKind::SingularWronskian: return "SingularWronskian";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::OverflowGuard: return "OverflowGuard";
    case ErrorKind::NotAResonance: return "NotAResonance";
    case ErrorKind::NotResonant: return "NotResonant";
  }
  return "Unknown";
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace deltalim
