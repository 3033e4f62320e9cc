#include "deltalim/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "deltalim/errors.hpp"
#include "deltalim/quadrature.hpp"
#include "deltalim/roots.hpp"

namespace deltalim {

double ScalingLaw::lambda(double eps) const {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  if (remainder_exponent) {
    return theta / (eps * eps) + remainder_sign * std::pow(eps, -*remainder_exponent);
  }
  return theta / (eps * eps) + omega / eps;
}

double ScalingLaw::rescaled_coupling(double eps) const {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  if (remainder_exponent) {
    return theta + remainder_sign * std::pow(eps, 2.0 - *remainder_exponent);
  }
  return theta + omega * eps;
}

EndpointData shoot_residual(const Potential& v, double theta, double tol) {
  const auto end = solve_psi(v, theta, 0.0, 0.0, tol).back();
  return {end.value.real(), end.derivative.real()};
}

ProfileIntegrals profile_integrals(const Potential& v, const Trajectory& psi) {
  const auto& rule = quad::gauss16();
  ProfileIntegrals out;
  for (const auto& st : psi.steps()) {
    const double a = st.x0;
    const double b = st.x1();
    if (!(b > a)) continue;
    const Cubic& p = v.piece(v.piece_index(0.5 * (a + b)));
    out.I += quad::panel(rule, [&](double x) {
      const double y = st.at(x)[0].real();
      return p(x) * y * y;
    }, a, b);
    out.J += quad::panel(rule, [&](double x) {
      const double d = st.at(x)[1].real();
      return d * d;
    }, a, b);
  }
  const auto end = psi.back();
  out.psi_M = end.value.real();
  out.dpsi_M = end.derivative.real();
  return out;
}

namespace {

double degenerate_threshold(const Potential& v) {
  return 1e-12 * std::max(1.0, v.support_end());
}

ResonanceHit certify(const Potential& v, double theta, double lo, double hi,
                     const ResonanceOptions& opt) {
  const auto traj = solve_psi(v, theta, 0.0, 0.0, opt.ode_tol);
  const auto ints = profile_integrals(v, traj);
  if (std::abs(ints.psi_M) < degenerate_threshold(v)) {
    throw Error(ErrorKind::DegenerateProfile,
                "psi(M) vanishes at theta=" + num(theta));
  }
  ResonanceHit hit;
  hit.theta = theta;
  hit.residual = std::abs(ints.dpsi_M);
  hit.bracket_lo = lo;
  hit.bracket_hi = hi;
  hit.psi_M = ints.psi_M;
  hit.integral_I = ints.I;
  hit.integral_J = ints.J;
  hit.dG_dtheta = ints.I / ints.psi_M;
  return hit;
}

// Bisection that stops once the bracket is narrower than root_tol (1 + |theta|)
// and the residual is below root_tol, or when the bracket cannot shrink.
ResonanceHit refine(const Potential& v, roots::Bracket br, const ResonanceOptions& opt) {
  auto f = [&](double th) { return shoot_residual(v, th, opt.ode_tol).dpsi_M; };
  double a = br.lo, b = br.hi, fa = br.f_lo;
  double mid = 0.5 * (a + b);
  double fm = f(mid);
  for (int it = 0; it < 200; ++it) {
    const double width_tol = opt.root_tol * (1.0 + std::abs(mid));
    if ((b - a) <= width_tol && std::abs(fm) <= opt.root_tol) break;
    if (fm == 0.0) break;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
    const double next = 0.5 * (a + b);
    if (!(next > a && next < b)) break;
    mid = next;
    fm = f(mid);
  }
  if (std::abs(fm) > opt.root_tol) {
    throw Error(ErrorKind::BracketScanTooCoarse,
                "residual " + num(std::abs(fm)) + " stays above root_tol near theta=" +
                    num(mid));
  }
  return certify(v, mid, br.lo, br.hi, opt);
}

}  // namespace

std::vector<ResonanceHit> find_resonances(const Potential& v, double lo, double hi,
                                          std::size_t max_hits, const ResonanceOptions& opt) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
    throw Error(ErrorKind::InvalidArgument, "theta range must be a bounded interval lo < hi");
  }
  if (!(opt.root_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "root_tol must be positive");
  auto f = [&](double th) { return shoot_residual(v, th, opt.ode_tol).dpsi_M; };
  auto brackets = roots::scan(f, lo, hi, opt.cells);
  auto dist = [](const roots::Bracket& b) {
    return std::min(std::abs(b.lo), std::abs(b.hi));
  };
  std::stable_sort(brackets.begin(), brackets.end(),
                   [&](const auto& x, const auto& y) { return dist(x) < dist(y); });
  std::vector<ResonanceHit> hits;
  for (const auto& br : brackets) {
    if (hits.size() >= max_hits) break;
    hits.push_back(refine(v, br, opt));
  }
  std::stable_sort(hits.begin(), hits.end(), [](const auto& x, const auto& y) {
    return std::abs(x.theta) < std::abs(y.theta);
  });
  return hits;
}

std::optional<ResonanceHit> nearby_resonance(const Potential& v, double theta, double tol,
                                             const ResonanceOptions& opt) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tol must be positive");
  const double w = tol * (1.0 + std::abs(theta));
  auto f = [&](double th) { return shoot_residual(v, th, opt.ode_tol).dpsi_M; };
  const double flo = f(theta - w);
  const double fhi = f(theta + w);
  if (flo == 0.0 || (flo < 0.0) != (fhi < 0.0)) {
    return refine(v, {theta - w, theta + w, flo, fhi}, opt);
  }
  if (std::abs(f(theta)) <= opt.root_tol) return certify(v, theta, theta, theta, opt);
  return std::nullopt;
}

ResonanceHit locate_resonance(const Potential& v, double theta, double tol,
                              const ResonanceOptions& opt) {
  if (auto hit = nearby_resonance(v, theta, tol, opt)) return *hit;
  throw Error(ErrorKind::NotAResonance,
              "no resonance within " + num(tol) + " of theta=" + num(theta));
}

double dG_dtheta(const Potential& v, const ResonanceHit& hit, double tol) {
  const auto ints = profile_integrals(v, solve_psi(v, hit.theta, 0.0, 0.0, tol));
  if (std::abs(ints.psi_M) < degenerate_threshold(v)) {
    throw Error(ErrorKind::DegenerateProfile, "psi(M) vanishes");
  }
  return ints.I / ints.psi_M;
}

double robin_alpha(const Potential& v, const ResonanceHit& hit, double omega) {
  if (!std::isfinite(omega)) throw Error(ErrorKind::InvalidArgument, "omega must be finite");
  if (std::abs(hit.psi_M) < degenerate_threshold(v)) {
    throw Error(ErrorKind::DegenerateProfile, "psi(M) vanishes");
  }
  return omega * hit.integral_I / (hit.psi_M * hit.psi_M);
}

LimitDescriptor classify_scaling(const Potential& v, const ScalingLaw& law, double tol,
                                 const ResonanceOptions& opt) {
  LimitDescriptor out;
  out.hit = nearby_resonance(v, law.theta, tol, opt);
  if (out.hit && !law.remainder_exponent) {
    out.kind = LimitDescriptor::Kind::Robin;
    out.alpha = robin_alpha(v, *out.hit, law.omega);
  }
  return out;
}

}  // namespace deltalim
