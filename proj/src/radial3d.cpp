#include "deltalim/radial3d.hpp"

#include <cmath>
#include <string>

#include "deltalim/errors.hpp"
#include "deltalim/quadrature.hpp"

namespace deltalim {

std::vector<double> log_grid(double r_min, double r_max, std::size_t n) {
  if (!(r_min > 0.0) || !(r_max > r_min) || n < 2) {
    throw Error(ErrorKind::InvalidArgument, "log grid needs 0 < r_min < r_max and n >= 2");
  }
  std::vector<double> r(n);
  const double step = std::log(r_max / r_min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) r[i] = r_min * std::exp(step * static_cast<double>(i));
  r.back() = r_max;
  return r;
}

RadialCase classify_3d(const Potential& v, double theta, double omega, double tol,
                       double r_max, std::size_t profile_points, const ResonanceOptions& opt) {
  RadialCase c;
  c.v = v;
  c.theta = theta;
  c.omega = omega;
  c.hit = nearby_resonance(v, theta, tol, opt);
  if (!c.hit) return c;
  c.verdict = RadialCase::Verdict::Resonant;
  c.alpha = robin_alpha(v, *c.hit, omega);
  c.alpha_per_omega = robin_alpha(v, *c.hit, 1.0);
  if (profile_points >= 2) {
    const double r_min = 1e-3 * v.support_end();
    const auto r = log_grid(r_min, std::max(r_max, 2.0 * r_min), profile_points);
    c.profile = resonance_profile(c, r);
  }
  return c;
}

std::vector<ProfileSample> resonance_profile(const RadialCase& c, std::span<const double> r) {
  if (!c.resonant() || !c.hit) {
    throw Error(ErrorKind::NotResonant,
                "theta=" + num(c.theta) + " is not a zero-energy resonance");
  }
  const double M = c.v.support_end();
  const auto traj = solve_psi(c.v, c.hit->theta, 0.0, 0.0, 1e-12);
  const double psi_M = traj.back().value.real();
  std::vector<ProfileSample> out;
  out.reserve(r.size());
  for (const double x : r) {
    if (!(x > 0.0)) throw Error(ErrorKind::InvalidArgument, "profile radii must be positive");
    const double psi = x >= M ? psi_M : traj.at(x).value.real();
    out.push_back({x, psi / x});
  }
  return out;
}

TailDiagnostic tail_diagnostic(const RadialCase& c, std::span<const double> radii,
                               double delta) {
  if (!c.resonant() || !c.hit) throw Error(ErrorKind::NotResonant, "tail of a non-resonant case");
  const double M = c.v.support_end();
  const double psi_M = c.hit->psi_M;
  TailDiagnostic d;
  d.delta = delta;
  const double c2 = psi_M * psi_M;
  for (const double R : radii) {
    if (!(R > M)) continue;
    d.radius.push_back(R);
    // r^2 (psi_M / r)^2 = psi_M^2 on [M, R].
    d.plain.push_back(c2 * (R - M));
    const auto w = quad::adaptive(
        [&](double r) { return std::complex<double>(c2 * std::pow(1.0 + r * r, -0.5 * (1.0 + delta))); },
        M, R);
    d.weighted.push_back(w.value.real());
  }
  const std::size_t n = d.radius.size();
  if (n >= 3) {
    // Growth per unit radius over the last two intervals.
    auto rate = [&](const std::vector<double>& v, std::size_t i) {
      return (v[i] - v[i - 1]) / (d.radius[i] - d.radius[i - 1]);
    };
    d.plain_diverging = rate(d.plain, n - 1) >= 0.99 * rate(d.plain, n - 2) &&
                        rate(d.plain, n - 1) > 0.0;
    d.weighted_settling = rate(d.weighted, n - 1) < rate(d.weighted, n - 2);
  }
  return d;
}

}  // namespace deltalim
