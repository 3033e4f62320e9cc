#include "deltalim/ode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "deltalim/errors.hpp"

namespace deltalim {

Trajectory::Trajectory(std::vector<dop853::Step<2>> steps, double tol, double x_scale,
                       cplx value_scale, cplx derivative_scale)
    : steps_(std::move(steps)),
      tol_(tol),
      x_scale_(x_scale),
      value_scale_(value_scale),
      derivative_scale_(derivative_scale) {
  if (steps_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty trajectory");
  }
  nodes_.reserve(steps_.size() + 1);
  for (const auto& st : steps_) {
    nodes_.push_back({st.x0 * x_scale_, value_scale_ * st.r[0][0],
                      derivative_scale_ * st.r[0][1]});
  }
  const auto& last = steps_.back();
  const auto end = last.at(last.x1());
  nodes_.push_back({last.x1() * x_scale_, value_scale_ * end[0],
                    derivative_scale_ * end[1]});
}

CauchyState Trajectory::at(double x) const {
  const double s = x / x_scale_;
  const double lo = steps_.front().x0;
  const double hi = steps_.back().x1();
  const double slack = 1e-12 * std::max(1.0, hi);
  if (s < lo - slack || s > hi + slack || std::isnan(s)) {
    throw Error(ErrorKind::InvalidArgument,
                "trajectory evaluated outside [0, " + num(x_end()) + "]");
  }
  const double sc = std::clamp(s, lo, hi);
  auto it = std::upper_bound(steps_.begin(), steps_.end(), sc,
                             [](double v, const dop853::Step<2>& st) { return v < st.x0; });
  if (it != steps_.begin()) --it;
  const auto y = it->at(sc);
  return {x, value_scale_ * y[0], derivative_scale_ * y[1]};
}

Trajectory solve_cauchy(const Potential& v, double theta, cplx gamma_z, cplx value0,
                        cplx derivative0, double tol, std::size_t step_budget) {
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "tol must be positive");
  }
  if (!std::isfinite(theta) || !std::isfinite(gamma_z.real()) ||
      !std::isfinite(gamma_z.imag())) {
    throw Error(ErrorKind::InvalidArgument, "non-finite coupling");
  }
  const dop853::Control control{tol, tol, step_budget};
  std::vector<dop853::Step<2>> steps;
  dop853::State<2> y{value0, derivative0};
  std::size_t used = 0;
  const auto bps = v.breakpoints();
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const Cubic& p = v.piece(i);
    auto rhs = [&](double x, const dop853::State<2>& s, dop853::State<2>& ds) {
      ds[0] = s[1];
      ds[1] = (theta * p(x) - gamma_z) * s[0];
    };
    dop853::integrate_segment<2>(rhs, bps[i], bps[i + 1], y, control, steps, used);
  }
  return Trajectory(std::move(steps), tol);
}

Trajectory solve_psi(const Potential& v, double theta, double gamma, cplx z, double tol) {
  return solve_cauchy(v, theta, gamma * z, 0.0, 1.0, tol);
}

Trajectory solve_psi_tilde(const Potential& v, double theta, double tol) {
  return solve_cauchy(v, theta, 0.0, 1.0, 0.0, tol);
}

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  }
}

Trajectory rescaled(const Potential& v, double lambda, double eps, cplx z, double tol,
                    cplx value0, cplx derivative0, cplx value_scale,
                    cplx derivative_scale) {
  check_eps(eps);
  auto base = solve_cauchy(v, eps * eps * lambda, eps * eps * z, value0, derivative0, tol);
  std::vector<dop853::Step<2>> steps(base.steps().begin(), base.steps().end());
  return Trajectory(std::move(steps), tol, eps, value_scale, derivative_scale);
}

}  // namespace

Trajectory solve_u(const Potential& v, double lambda, double eps, cplx z, double tol) {
  return rescaled(v, lambda, eps, z, tol, 0.0, 1.0, eps, 1.0);
}

Trajectory solve_v_tilde(const Potential& v, double lambda, double eps, cplx z, double tol) {
  return rescaled(v, lambda, eps, z, tol, 1.0, 0.0, 1.0, 1.0 / eps);
}

}  // namespace deltalim
