#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "deltalim/ode.hpp"
#include "deltalim/potential.hpp"

namespace deltalim {

/// A certified root of theta -> psi'_theta(M).
struct ResonanceHit {
  double theta = 0.0;
  double residual = 0.0;  // |psi'_theta(M)|
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double psi_M = 0.0;
  double integral_I = 0.0;  // int_0^M V psi^2
  double integral_J = 0.0;  // int_0^M (psi')^2
  double dG_dtheta = 0.0;   // I / psi(M)
};

struct ResonanceOptions {
  double root_tol = 1e-10;
  double ode_tol = 1e-12;
  std::size_t cells = 400;
};

/// lambda(eps) = theta/eps^2 + omega/eps, or theta/eps^2 + sign eps^(-gamma_r)
/// when a sub-critical remainder exponent is set.
struct ScalingLaw {
  double theta = 0.0;
  double omega = 0.0;
  std::optional<double> remainder_exponent;
  double remainder_sign = 1.0;

  double lambda(double eps) const;
  /// eps^2 lambda(eps), the coupling seen by the rescaled problem on [0, M].
  double rescaled_coupling(double eps) const;
};

struct EndpointData {
  double psi_M = 0.0;
  double dpsi_M = 0.0;
};

/// Integrals of the zero-energy profile on [0, M], Gauss-Legendre on every
/// integrator step.
struct ProfileIntegrals {
  double psi_M = 0.0;
  double dpsi_M = 0.0;
  double I = 0.0;
  double J = 0.0;
};

EndpointData shoot_residual(const Potential& v, double theta, double tol = 1e-12);

ProfileIntegrals profile_integrals(const Potential& v, const Trajectory& psi);

/// Every resonance in [lo, hi] found by a uniform scan and bisection, sorted
/// by |theta| and truncated to max_hits.
std::vector<ResonanceHit> find_resonances(const Potential& v, double lo, double hi,
                                          std::size_t max_hits = 16,
                                          const ResonanceOptions& opt = {});

/// The resonance within tol (1 + |theta|) of theta, if there is one.
std::optional<ResonanceHit> nearby_resonance(const Potential& v, double theta, double tol,
                                             const ResonanceOptions& opt = {});

/// Like nearby_resonance but throws Error(NotAResonance) when none is found.
ResonanceHit locate_resonance(const Potential& v, double theta, double tol,
                              const ResonanceOptions& opt = {});

/// I / psi(M) recomputed from a fresh trajectory at hit.theta.
double dG_dtheta(const Potential& v, const ResonanceHit& hit, double tol = 1e-12);

/// alpha = omega I / psi(M)^2.
double robin_alpha(const Potential& v, const ResonanceHit& hit, double omega);

struct LimitDescriptor {
  enum class Kind { Dirichlet, Robin };
  Kind kind = Kind::Dirichlet;
  double alpha = 0.0;  // meaningful for Robin only
  std::optional<ResonanceHit> hit;

  bool is_robin() const noexcept { return kind == Kind::Robin; }
  const char* name() const noexcept { return is_robin() ? "robin" : "dirichlet"; }
};

LimitDescriptor classify_scaling(const Potential& v, const ScalingLaw& law,
                                 double tol = 1e-7, const ResonanceOptions& opt = {});

}  // namespace deltalim
