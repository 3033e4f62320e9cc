#include "deltalim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include "deltalim/errors.hpp"

namespace deltalim::quad {

GaussRule gauss_legendre(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "Gauss rule needs n >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Final derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
      p0 = p1;
      p1 = p2;
    }
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
  }
  return rule;
}

const GaussRule& gauss16() {
  static const GaussRule rule = gauss_legendre(16);
  return rule;
}

namespace {

// QUADPACK qk15 abscissae / weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  double a, b;
  std::complex<double> value;
  double error;
  bool operator<(const Piece& o) const { return error < o.error; }
};

Piece gk15(const ComplexIntegrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const auto fc = f(c);
  std::complex<double> kron = fc * kWgk[7];
  std::complex<double> gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const auto s = f(c - dx) + f(c + dx);
    kron += kWgk[j] * s;
    if (j % 2 == 1) gauss += kWg[j / 2] * s;
  }
  kron *= h;
  gauss *= h;
  return {a, b, kron, std::abs(kron - gauss)};
}

}  // namespace

AdaptiveResult adaptive(const ComplexIntegrand& f, double a, double b,
                        std::span<const double> cuts, const AdaptiveOptions& opt) {
  AdaptiveResult res;
  if (!(b > a)) return res;
  std::vector<double> pts{a};
  for (double c : cuts) {
    if (c > a && c < b) pts.push_back(c);
  }
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::priority_queue<Piece> heap;
  std::complex<double> total{};
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    auto p = gk15(f, pts[i], pts[i + 1]);
    total += p.value;
    err += p.error;
    heap.push(p);
  }
  std::size_t count = heap.size();
  while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
    if (count >= opt.max_intervals) {
      throw Error(ErrorKind::QuadratureFailure,
                  "adaptive quadrature exceeded " + num(opt.max_intervals) +
                      " intervals (error estimate " + num(err) + ")");
    }
    const Piece worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw Error(ErrorKind::QuadratureFailure, "interval cannot be bisected further");
    }
    const auto l = gk15(f, worst.a, mid);
    const auto r = gk15(f, mid, worst.b);
    total += l.value + r.value - worst.value;
    err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
    ++count;
  }
  // Re-sum to shed accumulated cancellation from the running updates.
  total = {};
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  res.value = total;
  res.error_estimate = err;
  res.intervals = count;
  return res;
}

}  // namespace deltalim::quad
