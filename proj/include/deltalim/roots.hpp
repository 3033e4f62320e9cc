#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "deltalim/errors.hpp"

namespace deltalim::roots {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

/// Uniform scan of [lo, hi] in `cells` cells, returning every cell whose
/// endpoint values differ in sign. A cell without an endpoint sign change is
/// probed at its midpoint when `probe_midpoints`; a sign flip there means two
/// roots (or a tangency) share the cell and raises BracketScanTooCoarse.
template <class F>
std::vector<Bracket> scan(F&& f, double lo, double hi, std::size_t cells,
                          bool probe_midpoints = true) {
  if (!(hi > lo) || cells == 0) {
    throw Error(ErrorKind::InvalidArgument, "scan needs lo < hi and cells > 0");
  }
  std::vector<Bracket> out;
  const double w = (hi - lo) / static_cast<double>(cells);
  double a = lo;
  double fa = f(a);
  for (std::size_t i = 1; i <= cells; ++i) {
    const double b = i == cells ? hi : lo + w * static_cast<double>(i);
    const double fb = f(b);
    if (fa == 0.0 || (fa < 0.0) != (fb < 0.0)) {
      out.push_back({a, b, fa, fb});
    } else if (probe_midpoints && fb != 0.0) {
      const double m = 0.5 * (a + b);
      const double fm = f(m);
      if (fm == 0.0 || (fm < 0.0) != (fa < 0.0)) {
        throw Error(ErrorKind::BracketScanTooCoarse,
                    "two sign changes inside scan cell [" + num(a) + ", " +
                        num(b) + "]");
      }
    }
    a = b;
    fa = fb;
  }
  return out;
}

/// Bisection on a sign-change bracket: stops after `max_iter` halvings or
/// once the bracket width is below abs_tol.
template <class F>
double bisect(F&& f, Bracket br, double abs_tol, int max_iter = 60) {
  double a = br.lo, b = br.hi, fa = br.f_lo;
  if (fa == 0.0) return a;
  if (br.f_hi == 0.0) return b;
  for (int it = 0; it < max_iter && (b - a) > abs_tol; ++it) {
    const double m = 0.5 * (a + b);
    if (!(m > a && m < b)) break;
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace deltalim::roots
