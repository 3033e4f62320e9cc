#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace deltalim::quad {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(std::size_t n);
/// Shared 16-point rule (computed once).
const GaussRule& gauss16();

/// Integral of f over [a, b] with a single Gauss-Legendre panel.
template <class F>
auto panel(const GaussRule& rule, F&& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  using R = decltype(f(mid));
  R sum{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

/// Composite Gauss-Legendre over consecutive cells [cuts_i, cuts_{i+1}].
template <class F>
auto composite(const GaussRule& rule, F&& f, std::span<const double> cuts) {
  using R = decltype(f(cuts.front()));
  R sum{};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    sum += panel(rule, f, cuts[i], cuts[i + 1]);
  }
  return sum;
}

struct AdaptiveOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-11;
  std::size_t max_intervals = 4000;
};

struct AdaptiveResult {
  std::complex<double> value;
  double error_estimate = 0.0;
  std::size_t intervals = 0;
};

using ComplexIntegrand = std::function<std::complex<double>(double)>;

/// Globally adaptive Gauss-Kronrod (7-15) over [a, b] split first at `cuts`
/// (points outside (a, b) are ignored). Throws Error(QuadratureFailure) when
/// the interval budget is exhausted before the tolerance is met.
AdaptiveResult adaptive(const ComplexIntegrand& f, double a, double b,
                        std::span<const double> cuts = {},
                        const AdaptiveOptions& opt = {});

}  // namespace deltalim::quad
