// Acceptance checks, one per criterion. `acceptance N` runs criterion N,
// no argument runs all. Each prints one PASS/FAIL line; extra lines starting
// with "  info:" carry diagnostics.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "deltalim/airy.hpp"
#include "deltalim/errors.hpp"
#include "deltalim/ode.hpp"
#include "deltalim/radial3d.hpp"
#include "deltalim/resolvent.hpp"
#include "deltalim/resonance.hpp"

using namespace deltalim;
using std::numbers::pi;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool report(int n, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  return ok;
}

void info(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
void info(const char* fmt, ...) {
  std::printf("  info: ");
  va_list ap;
  va_start(ap, fmt);
  std::vprintf(fmt, ap);
  va_end(ap);
  std::printf("\n");
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Potential random_piecewise(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_real_distribution<double> width(0.2, 0.6), coef(-1.0, 1.0);
  const int n = count(rng);
  std::vector<double> bp{0.0};
  std::vector<Cubic> pieces;
  for (int i = 0; i < n; ++i) {
    bp.push_back(bp.back() + width(rng));
    Cubic c;
    c.c[0] = 1.0 + coef(rng);
    c.c[1] = coef(rng);
    c.c[2] = 0.5 * coef(rng);
    pieces.push_back(c);
  }
  return Potential::piecewise(bp, pieces);
}

bool square_well_resonances() {
  const auto t0 = Clock::now();
  const auto hits = find_resonances(Potential::square(), -120, -0.1, 3);
  const double dt = seconds_since(t0);
  double worst = hits.size() == 3 ? 0.0 : INFINITY;
  for (std::size_t k = 0; k < hits.size() && k < 3; ++k) {
    const double want = -pi * pi * (k + 0.5) * (k + 0.5);
    worst = std::max(worst, std::abs(hits[k].theta - want) / std::abs(want));
  }
  return report(1, worst <= 1e-8 && dt <= 5.0,
                fmt("square-well resonances, max rel err %.3g, %.3g s", worst, dt));
}

bool square_well_alpha() {
  const auto sq = Potential::square();
  const auto hits = find_resonances(sq, -30, -0.1, 2);
  double worst = hits.size() == 2 ? 0.0 : INFINITY;
  for (const auto& h : hits) {
    for (double w : {1.0, 3.0, -2.0}) {
      worst = std::max(worst, std::abs(robin_alpha(sq, h, w) - w / 2) / std::abs(w / 2));
    }
  }
  return report(2, worst <= 1e-8,
                fmt("square-well Robin parameter = omega/2 at two resonances, max rel err %.3g",
                    worst));
}

bool identity_suite() {
  const auto t0 = Clock::now();
  std::mt19937 rng(314159);
  ResonanceOptions opt;
  opt.ode_tol = 1e-13;
  auto dpsi = [&](const Potential& v, double th) { return shoot_residual(v, th, 1e-13).dpsi_M; };
  double worst_id = 0.0, worst_fd = 0.0;
  int hits_seen = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto v = random_piecewise(rng);
    for (const auto& h : find_resonances(v, -150, 60, 6, opt)) {
      ++hits_seen;
      worst_id = std::max(worst_id,
                          std::abs(h.theta * h.integral_I + h.integral_J) / h.integral_J);
      const double step = 1e-4 * (1 + std::abs(h.theta));
      const double fd = (dpsi(v, h.theta + step) - dpsi(v, h.theta - step)) / (2 * step);
      worst_fd = std::max(worst_fd, std::abs(h.dG_dtheta - fd));
    }
  }
  const double dt = seconds_since(t0);
  return report(3, hits_seen > 0 && worst_id <= 1e-8 && worst_fd <= 1e-6 && dt <= 60,
                fmt("identity suite over %.0f resonances: identity %.3g (rel), "
                    "dG vs finite difference %.3g",
                    hits_seen, worst_id, worst_fd) +
                    fmt(", %.3g s", dt));
}

bool airy_suite() {
  double wr = 0.0, ode = 0.0;
  const double h = 1e-2;
  for (int i = 0; i < 1000; ++i) {
    const double x = -10.0 + 20.0 * i / 999.0;
    const auto q = airy_quad(x);
    wr = std::max(wr, std::abs(q.ai * q.dbi - q.dai * q.bi - 1 / pi));
    // Fourth-order second difference.
    double f[5];
    for (int j = -2; j <= 2; ++j) f[j + 2] = airy_quad(x + j * h).ai;
    const double d2 = (-f[4] + 16 * f[3] - 30 * f[2] + 16 * f[1] - f[0]) / (12 * h * h);
    ode = std::max(ode, std::abs(d2 - x * q.ai));
  }
  const double x = 25.0;
  const double zeta = 2.0 / 3.0 * std::pow(x, 1.5);
  const double leading = std::cos(zeta - pi / 4) * std::pow(x, -0.25) / std::sqrt(pi);
  const double ai = airy_quad(-x).ai;
  const double gap = std::abs(ai - leading);
  // Next asymptotic term, (5/72)/zeta sin(zeta - pi/4) x^{-1/4}/sqrt(pi).
  const double next = (5.0 / 72.0) / zeta * std::sin(zeta - pi / 4) * std::pow(x, -0.25) /
                      std::sqrt(pi);
  const bool ok = wr <= 1e-12 && ode <= 1e-6 && gap <= 1e-6;
  report(4, ok,
         fmt("Airy suite: Wronskian err %.3g, Ai''-xAi residual %.3g, ", wr, ode) +
             fmt("|Ai(-25) - leading asymptotic| = %.3g (limit 1e-6)", gap));
  info("Ai(-25) = %.12f, leading term = %.12f, leading + next term = %.12f (gap %.3g)", ai,
       leading, leading + next, std::abs(ai - leading - next));
  return ok;
}

bool dual_path() {
  double worst_root = 0.0, worst_alpha = 0.0;
  bool complete = true;
  ResonanceOptions opt;
  opt.root_tol = 1e-11;
  opt.ode_tol = 1e-13;
  for (double xi : {0.3, 0.7, 1.0}) {
    const auto v = Potential::linear(xi);
    const auto airy = linear_resonances(xi, -120, -0.1, 2);
    const auto ode = find_resonances(v, -120, -0.1, 2, opt);
    if (airy.size() != 2 || ode.size() != 2) {
      complete = false;
      continue;
    }
    for (int k = 0; k < 2; ++k) {
      worst_root = std::max(worst_root, std::abs(airy[k] - ode[k].theta));
      const double a1 = alpha_linear(xi, airy[k], 1.0);
      const double a2 = robin_alpha(v, ode[k], 1.0);
      worst_alpha = std::max(worst_alpha, std::abs(a1 - a2) / std::abs(a2));
    }
  }
  return report(5, complete && worst_root <= 1e-7 && worst_alpha <= 1e-6,
                fmt("Airy residual vs shooting roots %.3g, alpha_linear vs robin_alpha %.3g (rel)",
                    worst_root, worst_alpha));
}

bool triangular() {
  const double theta = linear_resonances(1.0, -50, -0.1, 1).at(0);
  const double a = alpha_linear(1.0, theta, 1.0);
  const double s = std::cbrt(theta);
  const auto at0 = airy_quad(0.0);
  const auto ats = airy_quad(s);
  const double ratio = at0.dai / ats.ai;
  const double printed = ratio * ratio / (3 * s);
  const double same_module = std::abs(a - printed);
  const double eps[] = {1e-2, 1e-3, 1e-4};
  const auto est = estimate_alpha(Potential::linear(1.0), theta, 1.0, eps);
  const double extrap = std::abs(a - est.extrapolated);
  const bool ok = same_module <= 1e-10 && extrap <= 1e-6;
  report(6, ok,
         fmt("triangular well: |alpha_linear - (1/(3 cbrt theta))(Ai'(0)/Ai(cbrt theta))^2| = %.3g,"
             " |alpha_linear - extrapolated u'/u| = %.3g",
             same_module, extrap));
  info("theta1 = %.15g, alpha_linear = %.15g, closed form as stated = %.15g", theta, a, printed);
  info("extrapolated u'/u = %.15g, observed order %.3g", est.extrapolated,
       est.observed_order.value_or(NAN));
  return ok;
}

bool convergence_dichotomy() {
  const auto t0 = Clock::now();
  std::vector<double> grid;
  for (int i = 0; i < 50; ++i) grid.push_back(0.1 + 4.9 * i / 49.0);
  const double eps[] = {1e-1, 1e-2, 1e-3};
  const auto f = Source::indicator(1, 2);
  const auto sq = Potential::square();
  const cplx z(0, 1);
  const double th = -pi * pi / 4;
  const auto a = convergence_study(sq, ScalingLaw{th, 2.0}, z, f, eps, grid);
  const auto b = convergence_study(sq, ScalingLaw{-1.0, 2.0}, z, f, eps, grid);
  const auto c = convergence_study(sq, ScalingLaw{th, 0.0, 1.5}, z, f, eps, grid);
  const bool ok_a = a.limit.is_robin() && std::abs(a.limit.alpha - 1.0) < 1e-6 && a.monotone &&
                    a.empirical_order >= 0.8;
  const bool ok_b = !b.limit.is_robin() && b.monotone;
  const bool ok_c = !c.limit.is_robin() && c.monotone;
  const double dt = seconds_since(t0);
  for (const auto* s : {&a, &b, &c}) {
    info("%s reference: errors %.3e %.3e %.3e, order %.3f", s->limit.name(), s->rows[0].error_l2,
         s->rows[1].error_l2, s->rows[2].error_l2, s->empirical_order);
  }
  return report(7, ok_a && ok_b && ok_c && dt <= 120,
                fmt("convergence dichotomy: robin order %.3g, dirichlet cases monotone %.0f, "
                    "%.3g s",
                    a.empirical_order, ok_b && ok_c ? 1.0 : 0.0, dt));
}

bool kernel_defects() {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(0.05, 2.5);
  const cplx z(0.3, 1.0);
  const double h = 5e-3;
  const double eps = 0.5;
  const std::vector<KernelEval> kernels = {
      kernel_scaled(Potential::square(), ScalingLaw{-pi * pi / 4, 2.0}.lambda(eps), eps, z),
      kernel_reference_robin(1.0, z), kernel_reference_dirichlet(z)};
  double ode = 0.0, jump = 0.0, bc = 0.0;
  for (const auto& k : kernels) {
    for (int i = 0; i < 20; ++i) {
      const double y = u(rng);
      double x = u(rng);
      while (std::abs(x - y) < 4 * h || std::abs(x - k.interior_end()) < 4 * h) x = u(rng);
      auto g = [&](double s) { return k.eval(s, y); };
      const cplx d2 = (-g(x + 2 * h) + 16.0 * g(x + h) - 30.0 * g(x) + 16.0 * g(x - h) -
                       g(x - 2 * h)) /
                      (12 * h * h);
      ode = std::max(ode, std::abs(-d2 + (k.potential_at(x) - z) * g(x)));
      jump = std::max(jump, std::abs(k.eval_dx(y, y, +1) - k.eval_dx(y, y, -1) + 1.0));
      const cplx b = k.kind() == KernelEval::Kind::Robin
                         ? k.alpha() * k.eval(0, y) - k.eval_dx(0, y)
                         : k.eval(0, y);
      bc = std::max(bc, std::abs(b));
    }
  }
  return report(8, ode <= 1e-6 && jump <= 1e-6 && bc <= 1e-8,
                fmt("kernel defects (scaled, robin, dirichlet): ODE residual %.3g, jump %.3g, "
                    "boundary %.3g",
                    ode, jump, bc));
}

bool corollary_3d() {
  std::mt19937 rng(2718);
  std::vector<std::pair<Potential, double>> cases;
  const std::vector<Potential> pots = {Potential::square(), Potential::linear(0.5),
                                       random_piecewise(rng), random_piecewise(rng),
                                       random_piecewise(rng)};
  for (const auto& v : pots) {
    const auto hits = find_resonances(v, -100, -0.1, 2);
    for (const auto& h : hits) cases.emplace_back(v, h.theta);
    // Non-resonant partners between and beside the resonances.
    if (hits.size() == 2) cases.emplace_back(v, 0.5 * (hits[0].theta + hits[1].theta));
    cases.emplace_back(v, hits.empty() ? -1.0 : 0.5 * hits[0].theta);
  }
  cases.emplace_back(Potential::zero(), -3.0);
  if (cases.size() > 20) cases.erase(cases.begin() + 20, cases.end());
  const double tol = 1e-7;
  int agree = 0, resonant = 0, exact_alpha = 0;
  for (const auto& [v, th] : cases) {
    const auto c = classify_3d(v, th, 1.7, tol);
    const auto scan = find_resonances(v, th - 5.0, th + 5.0, 64);
    bool member = false;
    for (const auto& h : scan) member = member || std::abs(h.theta - th) <= tol * (1 + std::abs(th));
    agree += c.resonant() == member;
    if (c.resonant()) {
      ++resonant;
      const auto hit = locate_resonance(v, th, tol);
      exact_alpha += *c.alpha == robin_alpha(v, hit, 1.7);
    }
  }
  const int n = static_cast<int>(cases.size());
  return report(9, n == 20 && agree == n && exact_alpha == resonant && resonant > 0 &&
                       resonant < n,
                fmt("3D classification agrees with resonance membership on %.0f/%.0f cases, "
                    "%.0f resonant alphas identical",
                    agree, n, exact_alpha));
}

bool xi_degeneration() {
  const double theta = -5.0;
  const double k = std::sqrt(5.0);
  std::vector<double> gaps, ders;
  for (double xi : {1e-1, 1e-2, 1e-3}) {
    double g = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double x = i / 400.0;
      g = std::max(g, std::abs(psi_linear_closed(xi, theta, x).value - std::sin(k * x) / k));
    }
    gaps.push_back(g);
    ders.push_back(std::abs(psi_linear_closed(xi, theta, 1.0).derivative - std::cos(k)));
  }
  const bool ok = gaps[1] < gaps[0] && gaps[2] < gaps[1] && ders[1] < ders[0] && ders[2] < ders[1];
  return report(10, ok,
                fmt("xi -> 0: max gaps %.3g, %.3g, %.3g", gaps[0], gaps[1], gaps[2]) +
                    fmt("; endpoint derivative gaps %.3g, %.3g, %.3g", ders[0], ders[1], ders[2]));
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<bool()>> criteria = {
      square_well_resonances, square_well_alpha, identity_suite, airy_suite, dual_path,
      triangular, convergence_dichotomy, kernel_defects, corollary_3d, xi_degeneration};
  std::vector<int> which;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  } else {
    for (int i = 1; i <= 10; ++i) which.push_back(i);
  }
  int failed = 0;
  for (int n : which) {
    if (n < 1 || n > 10) {
      std::fprintf(stderr, "no criterion %d\n", n);
      return 2;
    }
    try {
      failed += !criteria[n - 1]();
    } catch (const std::exception& e) {
      report(n, false, std::string("raised ") + e.what());
      ++failed;
    }
  }
  return failed ? 1 : 0;
}
