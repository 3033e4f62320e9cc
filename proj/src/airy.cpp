#include "deltalim/airy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "deltalim/errors.hpp"
#include "deltalim/roots.hpp"

namespace deltalim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = 1.732050807568877293527446341505872;
// Ai(0) and -Ai'(0).
constexpr double kC1 = 0.355028053887817239260063186004184;
constexpr double kC2 = 0.258819403792806798405183560189204;

constexpr double kAnchorLo = -9.0;
constexpr double kAnchorStep = 0.5;
constexpr int kAnchorCount = 37;  // -9, -8.5, ..., 9
constexpr double kAsymptoticStart = 9.0;
constexpr double kOverflowLimit = 104.0;

struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct Pair {
  double y = 0.0;
  double dy = 0.0;
};

struct Quad {
  Pair ai, bi;
};

Quad maclaurin(double x) {
  const double x3 = x * x * x;
  // f = 1 + x^3/3! + ..., g = x + 2 x^4/4! + ... and their derivatives.
  double tf = 1.0, tg = x, tdf = 0.5 * x * x, tdg = 1.0;
  Neumaier f, g, df, dg;
  f.add(tf);
  g.add(tg);
  df.add(tdf);
  dg.add(tdg);
  for (int k = 1; k < 200; ++k) {
    const double k3 = 3.0 * k;
    tf *= x3 / ((k3 - 1.0) * k3);
    tg *= x3 / (k3 * (k3 + 1.0));
    tdf *= x3 / (k3 * (k3 + 2.0));
    tdg *= x3 / (k3 * (k3 - 2.0));
    f.add(tf);
    g.add(tg);
    df.add(tdf);
    dg.add(tdg);
    const double m = std::max({std::abs(tf), std::abs(tg), std::abs(tdf), std::abs(tdg)});
    if (m < 1e-18 * (1.0 + std::abs(f.value())) && k > 2) break;
  }
  Quad q;
  q.ai = {kC1 * f.value() - kC2 * g.value(), kC1 * df.value() - kC2 * dg.value()};
  q.bi = {kSqrt3 * (kC1 * f.value() + kC2 * g.value()),
          kSqrt3 * (kC1 * df.value() + kC2 * dg.value())};
  return q;
}

// Taylor re-expansion of a solution of y'' = x y about x0, evaluated at x0 + h.
Pair taylor(double x0, Pair p, double h) {
  std::array<double, 3> a{p.y, p.dy, 0.5 * x0 * p.y};  // a_{k-2}, a_{k-1}, a_k rolling
  Neumaier val, der;
  val.add(a[0]);
  val.add(a[1] * h);
  der.add(a[1]);
  double hk = h * h;  // h^k for current k = 2
  double hk1 = h;     // h^(k-1)
  double small_run = 0;
  for (int k = 2; k < 120; ++k) {
    const double ak = a[2];
    val.add(ak * hk);
    der.add(k * ak * hk1);
    const double mag = std::abs(ak * hk) + std::abs(k * ak * hk1);
    if (mag < 1e-18 * (std::abs(val.value()) + std::abs(der.value()))) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    // a_{k+1} = (x0 a_{k-1} + a_{k-2}) / ((k+1) k)
    const double next = (x0 * a[1] + a[0]) / ((k + 1.0) * k);
    a = {a[1], a[2], next};
    hk1 = hk;
    hk *= h;
  }
  return {val.value(), der.value()};
}

Quad taylor(double x0, const Quad& q, double h) {
  return {taylor(x0, q.ai, h), taylor(x0, q.bi, h)};
}

struct AsymptoticCoefficients {
  std::array<double, 60> u{};
  std::array<double, 60> v{};
  AsymptoticCoefficients() {
    u[0] = v[0] = 1.0;
    for (std::size_t k = 1; k < u.size(); ++k) {
      const double kk = static_cast<double>(k);
      u[k] = u[k - 1] * (6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1) / (216.0 * kk * (2 * kk - 1));
      v[k] = -(6 * kk + 1) / (6 * kk - 1) * u[k];
    }
  }
};

const AsymptoticCoefficients& coeffs() {
  static const AsymptoticCoefficients c;
  return c;
}

// Sums sum_k sign^k c_k / zeta^k with optimal truncation.
double asym_series(const std::array<double, 60>& c, double zeta, double sign,
                   std::size_t start = 0, std::size_t stride = 1) {
  Neumaier s;
  double prev = std::numeric_limits<double>::infinity();
  double zpow = std::pow(zeta, -static_cast<double>(start));
  const double zstep = std::pow(zeta, -static_cast<double>(stride));
  double sgn = 1.0;
  for (std::size_t k = start; k < c.size(); k += stride) {
    const double term = sgn * c[k] * zpow;
    if (std::abs(term) > prev) break;
    s.add(term);
    prev = std::abs(term);
    if (prev < 1e-18 * std::abs(s.value())) break;
    zpow *= zstep;
    sgn *= sign;
  }
  return s.value();
}

Quad asymptotic_positive(double x) {
  const auto& c = coeffs();
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  const double q = std::pow(x, 0.25);
  const double rpi = 1.0 / std::sqrt(kPi);
  const double em = std::exp(-zeta);
  const double ep = std::exp(zeta);
  Quad r;
  r.ai.y = 0.5 * rpi * em / q * asym_series(c.u, zeta, -1.0);
  r.ai.dy = -0.5 * rpi * q * em * asym_series(c.v, zeta, -1.0);
  r.bi.y = rpi * ep / q * asym_series(c.u, zeta, 1.0);
  r.bi.dy = rpi * q * ep * asym_series(c.v, zeta, 1.0);
  return r;
}

Quad asymptotic_negative(double t) {
  const auto& c = coeffs();
  const double zeta = 2.0 / 3.0 * t * std::sqrt(t);
  const double q = std::pow(t, 0.25);
  const double rpi = 1.0 / std::sqrt(kPi);
  // Even and odd parts with alternating signs in k.
  const double ue = asym_series(c.u, zeta, -1.0, 0, 2);
  const double uo = asym_series(c.u, zeta, -1.0, 1, 2);
  const double ve = asym_series(c.v, zeta, -1.0, 0, 2);
  const double vo = asym_series(c.v, zeta, -1.0, 1, 2);
  const double phase = zeta - 0.25 * kPi;
  const double cs = std::cos(phase);
  const double sn = std::sin(phase);
  Quad r;
  r.ai.y = rpi / q * (cs * ue + sn * uo);
  r.ai.dy = rpi * q * (sn * ve - cs * vo);
  r.bi.y = rpi / q * (-sn * ue + cs * uo);
  r.bi.dy = rpi * q * (cs * ve + sn * vo);
  return r;
}

struct AnchorTable {
  std::array<Quad, kAnchorCount> q{};

  static double at(int j) { return kAnchorLo + kAnchorStep * j; }

  AnchorTable() {
    const int j0 = static_cast<int>((0.0 - kAnchorLo) / kAnchorStep);  // x = 0
    // Direct series on [-2, 1].
    for (int j = 0; j < kAnchorCount; ++j) {
      const double x = at(j);
      if (x >= -2.0 && x <= 1.0) q[j] = maclaurin(x);
    }
    // Negative axis: march down from -2 (oscillatory, both solutions stable).
    for (int j = j0 - 5; j >= 0; --j) {
      q[j] = taylor(at(j + 1), q[j + 1], -kAnchorStep);
    }
    // Bi forward from 1 (dominant direction).
    for (int j = j0 + 3; j < kAnchorCount; ++j) {
      q[j].bi = taylor(at(j - 1), q[j - 1].bi, kAnchorStep);
    }
    // Ai backward from the asymptotic value at 10 (recessive forward, dominant backward).
    Pair ai = asymptotic_positive(10.0).ai;
    double x = 10.0;
    for (int j = kAnchorCount - 1; at(j) > 1.0; --j) {
      ai = taylor(x, ai, at(j) - x);
      x = at(j);
      q[j].ai = ai;
    }
  }
};

const AnchorTable& anchors() {
  static const AnchorTable table;
  return table;
}

}  // namespace

AiryQuad airy_quad(double x) {
  if (std::isnan(x)) throw Error(ErrorKind::InvalidArgument, "airy_quad(NaN)");
  if (x > kOverflowLimit) {
    throw Error(ErrorKind::OverflowGuard,
                "Bi overflows double range at x=" + num(x));
  }
  Quad q;
  if (x > kAsymptoticStart) {
    q = asymptotic_positive(x);
  } else if (x < -kAsymptoticStart) {
    q = asymptotic_negative(-x);
  } else {
    const auto& tab = anchors();
    const int j = std::clamp(static_cast<int>(std::lround((x - kAnchorLo) / kAnchorStep)), 0,
                             kAnchorCount - 1);
    const double h = x - AnchorTable::at(j);
    q = h == 0.0 ? tab.q[j] : taylor(AnchorTable::at(j), tab.q[j], h);
  }
  return {x, q.ai.y, q.ai.dy, q.bi.y, q.bi.dy};
}

double linear_sigma(double xi, double theta) {
  if (xi == 0.0) throw Error(ErrorKind::InvalidArgument, "linear_sigma needs xi != 0");
  return std::cbrt(theta / (xi * xi));
}

namespace {

constexpr double kXiGuard = 1e-6;

PsiValue square_well(double theta, double x) {
  if (theta > 0.0) {
    const double k = std::sqrt(theta);
    return {std::sinh(k * x) / k, std::cosh(k * x)};
  }
  if (theta < 0.0) {
    const double k = std::sqrt(-theta);
    return {std::sin(k * x) / k, std::cos(k * x)};
  }
  return {x, 1.0};
}

}  // namespace

PsiValue psi_linear_closed(double xi, double theta, double x) {
  if (std::abs(xi) < kXiGuard) return square_well(theta, x);
  if (theta == 0.0) return {x, 1.0};
  const double sigma = linear_sigma(xi, theta);
  const double t = sigma * (1.0 - xi * x);
  const auto s = airy_quad(sigma);
  const auto a = airy_quad(t);
  return {kPi / (xi * sigma) * (s.bi * a.ai - s.ai * a.bi),
          kPi * (s.ai * a.dbi - s.bi * a.dai)};
}

double upsilon_linear_residual(double xi, double theta) {
  if (std::abs(xi) < kXiGuard) return square_well(theta, 1.0).derivative / kPi;
  if (theta == 0.0) return 1.0 / kPi;
  const double sigma = linear_sigma(xi, theta);
  const auto s = airy_quad(sigma);
  const auto e = airy_quad(sigma * (1.0 - xi));
  return s.ai * e.dbi - s.bi * e.dai;
}

double linear_integral_closed(double xi, double theta) {
  if (std::abs(xi) < kXiGuard) {
    // sin^2(kx)/k^2 integrates to 1/(2k^2) when cos k = 0.
    return -1.0 / (2.0 * theta);
  }
  const double sigma = linear_sigma(xi, theta);
  const auto s = airy_quad(sigma);
  const auto e = airy_quad(sigma * (1.0 - xi));
  if (e.dai == 0.0) throw Error(ErrorKind::DegenerateProfile, "Ai'(sigma(1-xi)) = 0");
  const double r = s.ai / e.dai;
  return -(1.0 + sigma * (1.0 - xi) * (1.0 - xi) * r * r) / (3.0 * xi * theta);
}

double alpha_linear(double xi, double theta, double omega, double residual_tol) {
  const double res = kPi * upsilon_linear_residual(xi, theta);
  if (!(std::abs(res) <= residual_tol)) {
    throw Error(ErrorKind::NotAResonance,
                "psi'(1) = " + num(res) + " at theta=" + num(theta));
  }
  if (std::abs(xi) < kXiGuard) return 0.5 * omega;
  const double sigma = linear_sigma(xi, theta);
  const auto s = airy_quad(sigma);
  const auto e = airy_quad(sigma * (1.0 - xi));
  if (s.ai == 0.0) throw Error(ErrorKind::DegenerateProfile, "Ai(sigma) = 0");
  const double q = e.dai / s.ai;
  return -(omega / (3.0 * xi * sigma)) * (q * q + sigma * (1.0 - xi) * (1.0 - xi));
}

LinearCaseResult linear_case(double xi, double theta, double residual_tol) {
  LinearCaseResult r;
  r.xi = xi;
  r.theta = theta;
  r.sigma = std::abs(xi) < kXiGuard ? 0.0 : linear_sigma(xi, theta);
  r.upsilon_residual = upsilon_linear_residual(xi, theta);
  r.alpha_per_omega = alpha_linear(xi, theta, 1.0, residual_tol);
  return r;
}

std::vector<double> linear_resonances(double xi, double lo, double hi,
                                      std::size_t max_roots, std::size_t cells,
                                      double root_tol) {
  auto f = [xi](double th) { return upsilon_linear_residual(xi, th); };
  std::vector<double> out;
  for (const auto& br : roots::scan(f, lo, hi, cells)) {
    out.push_back(roots::bisect(f, br, root_tol * (1.0 + std::abs(br.lo))));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](double a, double b) { return std::abs(a) < std::abs(b); });
  if (out.size() > max_roots) out.resize(max_roots);
  return out;
}

}  // namespace deltalim
