#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deltalim/ode.hpp"
#include "deltalim/potential.hpp"
#include "deltalim/quadrature.hpp"
#include "deltalim/resonance.hpp"

namespace deltalim {

/// Root k of k^2 = -z with Re k > 0, so e^{-k x} is the decaying exterior
/// solution of -f'' = z f.
cplx decay_rate(cplx z);

/// Green kernel of (H - z)^{-1} on the half-line, for H one of
///   scaled:    -d^2/dx^2 + lambda V(x/eps) with Dirichlet condition at 0,
///   robin:     -d^2/dx^2 with alpha f(0) = f'(0),
///   dirichlet: -d^2/dx^2 with f(0) = 0.
/// Immutable; copies share the interior trajectories.
class KernelEval {
 public:
  enum class Kind { Scaled, Robin, Dirichlet };

  Kind kind() const noexcept { return kind_; }
  std::string kind_name() const;
  cplx z() const noexcept { return z_; }
  cplx k() const noexcept { return k_; }
  cplx a() const noexcept { return a_; }
  cplx b() const noexcept { return b_; }
  cplx c() const noexcept { return c_; }
  cplx d() const noexcept { return d_; }
  /// W(phi1, phi2) = -2 a k for the scaled kernel.
  cplx wronskian() const noexcept { return K_; }
  double alpha() const noexcept { return alpha_; }
  double lambda() const noexcept { return lambda_; }
  double eps() const noexcept { return eps_; }
  /// Right end eps M of the interior region (0 for reference kernels).
  double interior_end() const noexcept { return L_; }
  /// Potential term lambda V(x/eps) of the operator (0 for reference kernels).
  double potential_at(double x) const;

  cplx eval(double x, double y) const;
  /// d/dx G(x, y). side > 0 takes the x > y branch, side < 0 the x < y branch,
  /// side = 0 picks by comparing x and y (x = y counts as x > y).
  cplx eval_dx(double x, double y, int side = 0) const;

  /// Regular solution at 0 and decaying solution at infinity with their
  /// derivatives, as used to build the kernel.
  std::pair<cplx, cplx> phi1(double x) const;
  std::pair<cplx, cplx> phi2(double x) const;

  friend KernelEval kernel_scaled(const Potential&, double, double, cplx, double);
  friend KernelEval kernel_reference_robin(double, cplx);
  friend KernelEval kernel_reference_dirichlet(cplx);

 private:
  KernelEval() = default;

  Kind kind_ = Kind::Dirichlet;
  cplx z_, k_;
  cplx a_, b_, c_, d_, K_;
  double alpha_ = 0.0;
  double lambda_ = 0.0;
  double eps_ = 0.0;
  double L_ = 0.0;
  std::shared_ptr<const Potential> v_;
  std::shared_ptr<const Trajectory> u_, vt_;
};

/// a = e^{-kL}(u(L) + u'(L)/k)/2 and b = e^{kL}(u(L) - u'(L)/k)/2, L = eps M.
std::pair<cplx, cplx> coefficients_ab(const Potential& v, double lambda, double eps, cplx z,
                                      double tol = 1e-12);

/// Throws Error(SingularWronskian) when |K| < 1e-14 and Error(InvalidArgument)
/// for real z.
KernelEval kernel_scaled(const Potential& v, double lambda, double eps, cplx z,
                         double tol = 1e-12);
KernelEval kernel_reference_robin(double alpha, cplx z);
KernelEval kernel_reference_dirichlet(cplx z);
/// Reference kernel matching a limit descriptor.
KernelEval kernel_reference(const LimitDescriptor& limit, cplx z);

/// Right-hand side for apply_resolvent: a callable with its support and
/// non-smooth points.
struct Source {
  std::function<cplx(double)> f;
  std::vector<double> breakpoints;
  /// Right end of the support; infinity for functions that merely decay.
  double support_end = std::numeric_limits<double>::infinity();

  static Source indicator(double lo, double hi);
  /// Piecewise-linear interpolation of samples (xs increasing), zero outside.
  static Source samples(std::vector<double> xs, std::vector<cplx> ys);
};

std::vector<cplx> apply_resolvent(const KernelEval& k, const Source& f,
                                  std::span<const double> x_points,
                                  const quad::AdaptiveOptions& opt = {});

struct AlphaEstimate {
  std::vector<double> eps;
  std::vector<double> alpha;      // Re u'(eps M)/u(eps M) per eps
  std::vector<double> imag_part;  // contamination, ~0 for real z
  double extrapolated = 0.0;
  std::optional<double> observed_order;
};

/// u'/u at the edge of the interior along lambda = theta/eps^2 + omega/eps,
/// extrapolated to eps = 0 by Neville's scheme. theta is first refined to
/// the nearby resonance (within theta_tol).
AlphaEstimate estimate_alpha(const Potential& v, double theta, double omega,
                             std::span<const double> eps_list, double tol = 1e-13,
                             cplx z = 0.0, double theta_tol = 1e-7);

/// u'/u at x = eps M for one eps.
cplx edge_log_derivative(const Potential& v, double lambda, double eps, cplx z,
                         double tol = 1e-12);

/// Polynomial extrapolation of values[i] sampled at nodes[i] to node 0.
double neville_at_zero(std::span<const double> nodes, std::span<const double> values);

struct ConvergenceRow {
  double eps = 0.0;
  double lambda = 0.0;
  double error_l2 = 0.0;
  double alpha_estimate = 0.0;
  std::string reference_kind;
};

struct ConvergenceStudy {
  LimitDescriptor limit;
  std::vector<ConvergenceRow> rows;
  /// Least-squares slope of log error against log eps.
  double empirical_order = 0.0;
  bool monotone = false;
};

ConvergenceStudy convergence_study(const Potential& v, const ScalingLaw& law, cplx z,
                                   const Source& f, std::span<const double> eps_list,
                                   std::span<const double> x_grid, double tol = 1e-12,
                                   double membership_tol = 1e-7);

}  // namespace deltalim
