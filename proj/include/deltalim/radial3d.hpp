#pragma once

#include <optional>
#include <span>
#include <vector>

#include "deltalim/potential.hpp"
#include "deltalim/resonance.hpp"

namespace deltalim {

struct ProfileSample {
  double r = 0.0;
  double psi = 0.0;  // Psi(r) = psi_theta(r) / r
};

/// Radial 3D potential W reduced to the half-line potential V(r) = W(r).
struct RadialCase {
  enum class Verdict { Resonant, NonResonant };

  Potential v = Potential::square();
  double theta = 0.0;
  double omega = 0.0;
  Verdict verdict = Verdict::NonResonant;
  /// omega I / psi(M)^2 when resonant; unset means alpha = infinity
  /// (free Laplacian limit).
  std::optional<double> alpha;
  std::optional<double> alpha_per_omega;
  std::optional<ResonanceHit> hit;
  std::vector<ProfileSample> profile;

  bool resonant() const noexcept { return verdict == Verdict::Resonant; }
};

/// Log-spaced radii on [r_min, r_max].
std::vector<double> log_grid(double r_min, double r_max, std::size_t n);

RadialCase classify_3d(const Potential& v, double theta, double omega, double tol = 1e-7,
                       double r_max = 10.0, std::size_t profile_points = 64,
                       const ResonanceOptions& opt = {});

/// psi_theta(r)/r, continued as psi_theta(M)/r for r >= M. Throws
/// Error(NotResonant) unless the case is resonant.
std::vector<ProfileSample> resonance_profile(const RadialCase& c, std::span<const double> r);

/// Partial integrals of r^2 Psi^2 over [M, R] for growing R. The unweighted
/// sums grow without bound (Psi is not square integrable) while the
/// <r>^{-1-delta} weighted ones level off.
struct TailDiagnostic {
  std::vector<double> radius;
  std::vector<double> plain;
  std::vector<double> weighted;
  double delta = 0.5;
  bool plain_diverging = false;
  bool weighted_settling = false;
};

TailDiagnostic tail_diagnostic(const RadialCase& c, std::span<const double> radii,
                               double delta = 0.5);

}  // namespace deltalim
