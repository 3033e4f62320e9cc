#pragma once

#include <complex>
#include <span>
#include <vector>

#include "deltalim/dop853.hpp"
#include "deltalim/potential.hpp"

namespace deltalim {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;
inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

/// Value and derivative of a solution at x.
struct CauchyState {
  double x = 0.0;
  cplx value;
  cplx derivative;
};

/// Dense solution of a second-order linear problem on [0, x_end].
///
/// The underlying integration always runs on the potential's own interval
/// [0, M]; a Trajectory may present it rescaled as
///   f(x) = value_scale * psi(x / x_scale),  f'(x) = derivative_scale * psi'(x / x_scale)
/// which is how the interior solutions of the scaled operator are exposed.
class Trajectory {
 public:
  Trajectory(std::vector<dop853::Step<2>> steps, double tol, double x_scale = 1.0,
             cplx value_scale = 1.0, cplx derivative_scale = 1.0);

  CauchyState at(double x) const;
  CauchyState front() const { return nodes_.front(); }
  CauchyState back() const { return nodes_.back(); }

  /// Step endpoints in the presented coordinate, including every breakpoint.
  std::span<const CauchyState> nodes() const noexcept { return nodes_; }
  /// Raw dense steps in the unscaled coordinate.
  std::span<const dop853::Step<2>> steps() const noexcept { return steps_; }

  double x_end() const noexcept { return nodes_.back().x; }
  double tolerance() const noexcept { return tol_; }
  double x_scale() const noexcept { return x_scale_; }

 private:
  std::vector<dop853::Step<2>> steps_;
  std::vector<CauchyState> nodes_;
  double tol_;
  double x_scale_;
  cplx value_scale_;
  cplx derivative_scale_;
};

/// -psi'' + (theta V - gamma_z) psi = 0 on [0, M] with the given Cauchy data at
/// 0. Steps restart at every breakpoint of V.
Trajectory solve_cauchy(const Potential& v, double theta, cplx gamma_z,
                        cplx value0, cplx derivative0, double tol = kDefaultTol,
                        std::size_t step_budget = kDefaultStepBudget);

/// psi_{theta,gamma}: -psi'' + (theta V - gamma z) psi = 0, psi(0)=0, psi'(0)=1.
Trajectory solve_psi(const Potential& v, double theta, double gamma, cplx z,
                     double tol = kDefaultTol);

/// Second zero-energy solution: psi~(0)=1, psi~'(0)=0.
Trajectory solve_psi_tilde(const Potential& v, double theta, double tol = kDefaultTol);

/// Interior solution u of -u'' + (lambda V(x/eps) - z) u = 0 on [0, eps M],
/// u(0)=0, u'(0)=1, via u(x) = eps psi_{eps^2 lambda, eps^2}(x/eps).
Trajectory solve_u(const Potential& v, double lambda, double eps, cplx z,
                   double tol = kDefaultTol);

/// Companion interior solution v~ with v~(0)=1, v~'(0)=0 (so W(u, v~) = -1).
Trajectory solve_v_tilde(const Potential& v, double lambda, double eps, cplx z,
                         double tol = kDefaultTol);

}  // namespace deltalim
