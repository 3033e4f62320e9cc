#pragma once

#include <cstddef>
#include <vector>

namespace deltalim {

/// Ai, Ai', Bi, Bi' at one real argument.
struct AiryQuad {
  double x = 0.0;
  double ai = 0.0;
  double dai = 0.0;
  double bi = 0.0;
  double dbi = 0.0;
};

/// Real-argument Airy functions, about 14 significant digits on [-30, 30].
/// Throws Error(OverflowGuard) for x > 104, where Bi leaves double range.
AiryQuad airy_quad(double x);

/// sigma = real cube root of theta / xi^2.
double linear_sigma(double xi, double theta);

struct PsiValue {
  double value = 0.0;
  double derivative = 0.0;
};

/// Closed-form zero-energy solution for V_xi(x) = 1 - xi x on [0, 1]:
///   psi(x) = pi/(xi sigma) [Bi(sigma) Ai(t) - Ai(sigma) Bi(t)],  t = sigma (1 - xi x),
/// normalised so psi(0) = 0, psi'(0) = 1. |xi| < 1e-6 uses the square-well
/// form sin(sqrt(-theta) x)/sqrt(-theta) (or its sinh analogue).
PsiValue psi_linear_closed(double xi, double theta, double x);

/// Ai(sigma) Bi'(s) - Bi(sigma) Ai'(s) with s = sigma (1 - xi); equals
/// psi'(1) / pi, so its zeros in theta are the resonant couplings of V_xi.
double upsilon_linear_residual(double xi, double theta);

/// Closed form of the integral of V_xi psi^2 over [0, 1] at a resonance:
///   -(1 / (3 xi theta)) [1 + sigma (1 - xi)^2 (Ai(sigma) / Ai'(s))^2].
double linear_integral_closed(double xi, double theta);

/// Robin parameter of the linear family at a resonant theta:
///   alpha = -(omega / (3 xi sigma)) [(Ai'(s) / Ai(sigma))^2 + sigma (1 - xi)^2].
/// Throws Error(NotAResonance) when |psi'(1)| exceeds `residual_tol`.
double alpha_linear(double xi, double theta, double omega, double residual_tol = 1e-8);

struct LinearCaseResult {
  double xi = 0.0;
  double theta = 0.0;
  double sigma = 0.0;
  double upsilon_residual = 0.0;
  double alpha_per_omega = 0.0;

  PsiValue psi(double x) const { return psi_linear_closed(xi, theta, x); }
};

LinearCaseResult linear_case(double xi, double theta, double residual_tol = 1e-8);

/// Zeros of upsilon_linear_residual in [lo, hi] by scan + bisection, ordered
/// by increasing |theta|, at most max_roots of them.
std::vector<double> linear_resonances(double xi, double lo, double hi,
                                      std::size_t max_roots, std::size_t cells = 400,
                                      double root_tol = 1e-13);

}  // namespace deltalim
