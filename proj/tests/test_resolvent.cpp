#include <cmath>
#include <numbers>
#include <random>

#include "deltalim/errors.hpp"
#include "deltalim/resolvent.hpp"
#include "doctest.h"

using namespace deltalim;
using std::numbers::pi;

namespace {

const double kTheta0 = -pi * pi / 4;

// Fourth-order second difference in x of G(., y).
cplx d2x(const KernelEval& k, double x, double y, double h) {
  auto g = [&](double s) { return k.eval(s, y); };
  return (-g(x + 2 * h) + 16.0 * g(x + h) - 30.0 * g(x) + 16.0 * g(x - h) - g(x - 2 * h)) /
         (12 * h * h);
}

std::vector<KernelEval> sample_kernels(cplx z) {
  return {kernel_scaled(Potential::square(), kTheta0 / 0.25 + 2.0 / 0.5, 0.5, z),
          kernel_scaled(Potential::linear(0.7), -8.0, 0.8, z),
          kernel_reference_robin(1.3, z), kernel_reference_robin(-0.4, z),
          kernel_reference_dirichlet(z)};
}

}  // namespace

TEST_CASE("branch of the exterior decay rate") {
  for (cplx z : {cplx(0, 1), cplx(0, -1), cplx(-3, 0.1), cplx(5, -2)}) {
    const cplx k = decay_rate(z);
    CHECK(k.real() > 0);
    CHECK(std::abs(k * k + z) < 1e-14);
  }
}

TEST_CASE("exterior coefficients for the free interior") {
  const cplx z(0, 1);
  const cplx k = decay_rate(z);
  auto [a, b] = coefficients_ab(Potential::zero(), 7.0, 0.3, z);
  CHECK(std::abs(a - 1.0 / (2.0 * k)) < 1e-12);
  CHECK(std::abs(b + 1.0 / (2.0 * k)) < 1e-12);
  std::tie(a, b) = coefficients_ab(Potential::square(), 0.0, 0.5, cplx(0, 2));
  CHECK(std::abs(a - 1.0 / (2.0 * decay_rate(cplx(0, 2)))) < 1e-12);
  const auto ker = kernel_scaled(Potential::square(), 30.0, 0.2, z);
  CHECK(std::abs(ker.wronskian() + 2.0 * ker.a() * ker.k()) < 1e-15);
}

TEST_CASE("free scaled kernel equals the Dirichlet kernel") {
  const cplx z(0, 2);
  const auto s = kernel_scaled(Potential::zero(), 3.0, 0.4, z);
  const auto d = kernel_reference_dirichlet(z);
  const cplx k = decay_rate(z);
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(0, 3);
  for (int i = 0; i < 50; ++i) {
    const double x = u(rng), y = u(rng);
    const cplx want = (std::exp(-k * std::abs(x - y)) - std::exp(-k * (x + y))) / (2.0 * k);
    CHECK(std::abs(d.eval(x, y) - want) < 1e-14);
    CHECK(std::abs(s.eval(x, y) - want) < 1e-11);
  }
  const auto di = kernel_reference_dirichlet(cplx(0, 1));
  const cplx ki = decay_rate(cplx(0, 1));
  CHECK(std::abs(di.eval(1, 1) - (1.0 - std::exp(-2.0 * ki)) / (2.0 * ki)) < 1e-15);
}

TEST_CASE("symmetry and conjugate symmetry") {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(0, 2);
  const cplx z(0.5, 1.0);
  const auto ks = sample_kernels(z);
  const auto kc = sample_kernels(std::conj(z));
  for (std::size_t j = 0; j < ks.size(); ++j) {
    for (int i = 0; i < 100; ++i) {
      const double x = u(rng), y = u(rng);
      CHECK(ks[j].eval(x, y) == ks[j].eval(y, x));
      CHECK(std::abs(ks[j].eval(x, y) - std::conj(kc[j].eval(y, x))) <= 1e-9);
    }
  }
}

TEST_CASE("defect equation, jump and boundary conditions") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.05, 2.5);
  const cplx z(0.3, 1.0);
  const double h = 5e-3;
  for (const auto& k : sample_kernels(z)) {
    for (int i = 0; i < 20; ++i) {
      const double y = u(rng);
      double x = u(rng);
      const double L = k.interior_end();
      while (std::abs(x - y) < 4 * h || std::abs(x - L) < 4 * h || x < 4 * h) x = u(rng);
      const cplx res = -d2x(k, x, y, h) + (k.potential_at(x) - z) * k.eval(x, y);
      CHECK(std::abs(res) <= 1e-6);
      CHECK(std::abs(k.eval_dx(y, y, +1) - k.eval_dx(y, y, -1) + 1.0) <= 1e-6);
      if (k.kind() == KernelEval::Kind::Robin) {
        CHECK(std::abs(k.alpha() * k.eval(0, y) - k.eval_dx(0, y)) <= 1e-8);
      } else {
        CHECK(std::abs(k.eval(0, y)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("large Robin parameter approaches Dirichlet") {
  const cplx z(0, 1);
  const auto d = kernel_reference_dirichlet(z);
  double prev = 1e9;
  for (double a : {1e2, 1e4, 1e6}) {
    const double gap = std::abs(kernel_reference_robin(a, z).eval(0.7, 1.1) - d.eval(0.7, 1.1));
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 1e-6);
}

TEST_CASE("scaled kernel approaches the Robin kernel at a resonance") {
  const cplx z(0, 1);
  const double eps = 1e-3;
  const ScalingLaw law{kTheta0, 2.0};
  const auto s = kernel_scaled(Potential::square(), law.lambda(eps), eps, z);
  const auto r = kernel_reference_robin(1.0, z);
  CHECK(std::abs(s.eval(0.5, 0.7) - r.eval(0.5, 0.7)) < 10 * eps);
}

TEST_CASE("applying the resolvent") {
  const cplx z(0, 2);
  const auto d = kernel_reference_dirichlet(z);
  Source f;
  f.f = [](double y) { return cplx(std::exp(-y)); };
  const std::vector<double> xs = {0.5, 1.0, 2.0, 3.5};
  const double h = 1e-2;
  for (double x : xs) {
    const double pts[] = {x - 2 * h, x - h, x, x + h, x + 2 * h};
    const auto r = apply_resolvent(d, f, pts);
    const cplx lap = (-r[4] + 16.0 * r[3] - 30.0 * r[2] + 16.0 * r[1] - r[0]) / (12 * h * h);
    CHECK(std::abs(-lap - z * r[2] - std::exp(-x)) < 1e-5);
  }
  Source zero;
  zero.f = [](double) { return cplx(0); };
  for (const auto& v : apply_resolvent(d, zero, xs)) CHECK(v == cplx(0));

  // Piecewise-linear samples of the indicator's ramp version.
  const auto s = Source::samples({1.0, 1.5, 2.0}, {0.0, 1.0, 0.0});
  CHECK(s.f(1.25) == cplx(0.5));
  CHECK(s.f(2.5) == cplx(0.0));
  CHECK(std::isfinite(std::abs(apply_resolvent(d, s, xs)[0])));
}

TEST_CASE("first resolvent identity") {
  const cplx z1(0, 1), z2(1, -2);
  const auto r1 = kernel_reference_robin(0.8, z1);
  const auto r2 = kernel_reference_robin(0.8, z2);
  const auto f = Source::indicator(1, 2);
  Source g;  // R(z2) f
  g.f = [&](double y) {
    const double p[] = {y};
    return apply_resolvent(r2, f, p)[0];
  };
  g.breakpoints = {1.0, 2.0};
  const double xs[] = {0.3, 1.5, 2.7};
  const auto a = apply_resolvent(r1, f, xs);
  const auto b = apply_resolvent(r2, f, xs);
  quad::AdaptiveOptions loose;
  loose.rel_tol = 1e-9;
  const auto c = apply_resolvent(r1, g, xs, loose);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(a[i] - b[i] - (z1 - z2) * c[i]) < 1e-7);
}

TEST_CASE("estimate_alpha") {
  const double eps[] = {1e-2, 1e-3, 1e-4};
  const auto sq = Potential::square();
  const auto e = estimate_alpha(sq, -2.4674011, 1.0, eps);
  CHECK(std::abs(e.extrapolated - 0.5) < 1e-6);
  for (double im : e.imag_part) CHECK(std::abs(im) < 1e-12);
  REQUIRE(e.observed_order.has_value());
  CHECK(std::abs(*e.observed_order - 1.0) < 0.1);
  CHECK(std::abs(estimate_alpha(sq, -2.4674011, 0.0, eps).extrapolated) < 1e-6);
  const double two[] = {1e-2, 1e-3};
  CHECK_THROWS_AS(estimate_alpha(sq, -2.4674011, 1.0, two), Error);
  const double up[] = {1e-3, 1e-2, 1e-4};
  CHECK_THROWS_AS(estimate_alpha(sq, -2.4674011, 1.0, up), Error);
}

TEST_CASE("Neville extrapolation is exact on polynomials") {
  const double x[] = {0.3, 0.1, 0.02, 0.005};
  double y[4];
  for (int i = 0; i < 4; ++i) y[i] = 2.0 - 3 * x[i] + 5 * x[i] * x[i] - x[i] * x[i] * x[i];
  CHECK(std::abs(neville_at_zero(x, y) - 2.0) < 1e-13);
}

TEST_CASE("convergence studies") {
  std::vector<double> grid;
  for (int i = 0; i < 50; ++i) grid.push_back(0.1 + 4.9 * i / 49.0);
  const double eps[] = {1e-1, 1e-2, 1e-3};
  const auto f = Source::indicator(1, 2);
  const auto sq = Potential::square();
  const auto robin = convergence_study(sq, ScalingLaw{kTheta0, 2.0}, cplx(0, 1), f, eps, grid);
  CHECK(robin.limit.is_robin());
  CHECK(robin.monotone);
  CHECK(robin.empirical_order > 0.8);
  CHECK(robin.rows.at(0).reference_kind == "robin");
  const auto dir = convergence_study(sq, ScalingLaw{-1.0, 2.0}, cplx(0, 1), f, eps, grid);
  CHECK(!dir.limit.is_robin());
  CHECK(dir.monotone);
  const auto rem =
      convergence_study(sq, ScalingLaw{kTheta0, 0.0, 1.5}, cplx(0, 1), f, eps, grid);
  CHECK(!rem.limit.is_robin());
  CHECK(rem.monotone);
}

TEST_CASE("real z is rejected") {
  CHECK_THROWS_AS(kernel_reference_dirichlet(cplx(2, 0)), Error);
  CHECK_THROWS_AS(kernel_scaled(Potential::square(), 1.0, 0.1, cplx(-1, 0)), Error);
}
