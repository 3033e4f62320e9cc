// Command-line front end for the deltalim library.
//
// Exit status: 0 on success, 1 on a domain error (the error name is printed),
// 2 on a usage error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "deltalim/airy.hpp"
#include "deltalim/errors.hpp"
#include "deltalim/potential.hpp"
#include "deltalim/radial3d.hpp"
#include "deltalim/report.hpp"
#include "deltalim/resolvent.hpp"
#include "deltalim/resonance.hpp"

using namespace deltalim;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double number(const std::string& flag, const std::string& s) {
  try {
    return report::parse_number(s);
  } catch (const Error&) {
    throw UsageError(flag + ": not a number: '" + s + "'");
  }
}

std::vector<double> number_list(const std::string& flag, const std::string& s, char sep = ',') {
  std::vector<double> out;
  for (const auto& part : split(s, sep)) out.push_back(number(flag, part));
  return out;
}

std::pair<double, double> range(const std::string& flag, const std::string& s) {
  const auto v = number_list(flag, s, ':');
  if (v.size() != 2 || !(v[1] > v[0])) throw UsageError(flag + ": expected lo:hi with lo < hi");
  return {v[0], v[1]};
}

std::vector<double> grid(const std::string& flag, const std::string& s) {
  const auto v = number_list(flag, s, ':');
  if (v.size() != 3 || !(v[1] > v[0]) || !(v[2] >= 2) || v[2] != std::floor(v[2])) {
    throw UsageError(flag + ": expected lo:hi:n with lo < hi and integer n >= 2");
  }
  const auto n = static_cast<std::size_t>(v[2]);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = v[0] + (v[1] - v[0]) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

cplx complex_arg(const std::string& flag, const std::string& s, bool off_axis) {
  const auto v = number_list(flag, s);
  if (v.size() != 2) throw UsageError(flag + ": expected re,im");
  if (off_axis && v[1] == 0.0) throw UsageError(flag + ": Im z must be nonzero");
  return {v[0], v[1]};
}

std::vector<double> eps_list(const std::string& flag, const std::string& s) {
  auto v = number_list(flag, s);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0) || (i > 0 && !(v[i] < v[i - 1]))) {
      throw UsageError(flag + ": values must be positive and strictly decreasing");
    }
  }
  return v;
}

Potential potential_arg(const std::string& spec, double xi) {
  if (spec == "square") return Potential::square();
  if (spec == "linear") return Potential::linear(xi);
  if (spec == "zero") return Potential::zero();
  return load_potential_file(spec);
}

struct Output {
  std::string path;
  std::string format = "csv";

  void emit(const report::Table& t) const {
    const std::string text = format == "json" ? t.to_json() : t.to_csv();
    if (path.empty() || path == "-") {
      std::cout << text;
    } else {
      report::write_file(path, text);
    }
  }
};

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("-o,--out", out.path, "Output file (default stdout)");
  cmd->add_option("--format", out.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resonances, Robin parameters and resolvent kernels of scaled half-line "
               "Schroedinger operators"};
  app.require_subcommand(1);

  std::string pot = "square";
  double xi = 1.0;
  double ode_tol = 1e-12;
  Output out;

  auto with_potential = [&](CLI::App* cmd) {
    cmd->add_option("--potential", pot, "square | linear | zero | path to a JSON file");
    cmd->add_option("--xi", xi, "Slope of the linear potential 1 - xi x");
    cmd->add_option("--ode-tol", ode_tol, "Integrator tolerance")->check(CLI::PositiveNumber);
    add_output(cmd, out);
  };

  // resonances
  auto* res = app.add_subcommand("resonances", "Resonant couplings in a theta range");
  std::string theta_range = "-120:-0.1";
  std::size_t max_hits = 16;
  double root_tol = 1e-10;
  std::size_t cells = 400;
  with_potential(res);
  res->add_option("--theta-range", theta_range, "lo:hi");
  res->add_option("--max", max_hits, "Maximum number of hits (closest to 0 first)");
  res->add_option("--root-tol", root_tol)->check(CLI::PositiveNumber);
  res->add_option("--cells", cells, "Scan cells")->check(CLI::PositiveNumber);

  // alpha
  auto* alp = app.add_subcommand("alpha", "Robin parameter at a resonant theta");
  std::string theta_s;
  double omega = 1.0;
  double member_tol = 1e-7;
  std::string eps_s;
  with_potential(alp);
  alp->add_option("--theta", theta_s)->required();
  alp->add_option("--omega", omega);
  alp->add_option("--tol", member_tol, "Membership tolerance, relative")->check(CLI::PositiveNumber);
  alp->add_option("--eps", eps_s, "Also extrapolate u'/u over this decreasing eps list");

  // kernel
  auto* ker = app.add_subcommand("kernel", "Evaluate resolvent kernels");
  std::string kind = "scaled";
  std::string z_s = "0,1";
  double eps = 1e-2;
  std::string lambda_s;
  std::string theta_k = "-2.46740110027234";
  double alpha_ref = 0.0;
  std::string xs_s = "0.5";
  std::string ys_s = "0.7";
  with_potential(ker);
  ker->add_option("--kind", kind)->check(CLI::IsMember({"scaled", "robin", "dirichlet"}));
  ker->add_option("--z", z_s, "re,im");
  ker->add_option("--eps", eps)->check(CLI::PositiveNumber);
  ker->add_option("--lambda", lambda_s, "Coupling; default theta/eps^2 + omega/eps");
  ker->add_option("--theta", theta_k);
  ker->add_option("--omega", omega);
  ker->add_option("--alpha", alpha_ref, "Robin parameter of the reference kernel");
  ker->add_option("--x", xs_s, "Comma-separated x values");
  ker->add_option("--y", ys_s, "Comma-separated y values");

  // converge
  auto* con = app.add_subcommand("converge", "Kernel error against the limit operator");
  std::string conv_theta;
  std::optional<double> remainder;
  double remainder_sign = 1.0;
  std::string conv_eps = "1e-1,1e-2,1e-3";
  std::string source = "1:2";
  std::string x_grid = "0.1:5:50";
  std::string conv_z = "0,1";
  with_potential(con);
  con->add_option("--theta", conv_theta)->required();
  con->add_option("--omega", omega);
  con->add_option("--remainder", remainder, "Remainder exponent in (1, 2) replacing omega/eps");
  con->add_option("--remainder-sign", remainder_sign);
  con->add_option("--z", conv_z, "re,im");
  con->add_option("--eps", conv_eps, "Decreasing eps list");
  con->add_option("--source", source, "Support a:b of the indicator right-hand side");
  con->add_option("--grid", x_grid, "lo:hi:n evaluation grid");
  con->add_option("--tol", member_tol, "Membership tolerance, relative");

  // airy-table
  auto* air = app.add_subcommand("airy-table", "Ai, Ai', Bi, Bi' on a grid");
  std::string airy_grid = "-10:10:201";
  add_output(air, out);
  air->add_option("--grid", airy_grid, "lo:hi:n");

  // classify3d
  auto* c3 = app.add_subcommand("classify3d", "Zero-energy resonance of a radial 3D potential");
  std::string c3_theta;
  double r_max = 10.0;
  std::size_t points = 64;
  std::string profile_path;
  with_potential(c3);
  c3->add_option("--theta", c3_theta)->required();
  c3->add_option("--omega", omega);
  c3->add_option("--tol", member_tol, "Membership tolerance, relative");
  c3->add_option("--r-max", r_max)->check(CLI::PositiveNumber);
  c3->add_option("--points", points);
  c3->add_option("--profile", profile_path, "Write r,Psi samples here");

  // scan-xi
  auto* sx = app.add_subcommand("scan-xi", "Resonances and alpha across the linear family");
  std::string xi_list = "0,0.3,0.7,1";
  std::string sx_range = "-120:-0.1";
  std::size_t roots = 2;
  add_output(sx, out);
  sx->add_option("--xi", xi_list, "Comma-separated slopes");
  sx->add_option("--theta-range", sx_range, "lo:hi");
  sx->add_option("--roots", roots)->check(CLI::PositiveNumber);
  sx->add_option("--omega", omega);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*res) {
      const auto v = potential_arg(pot, xi);
      const auto [lo, hi] = range("--theta-range", theta_range);
      ResonanceOptions opt{root_tol, ode_tol, cells};
      const auto hits = find_resonances(v, lo, hi, max_hits, opt);
      out.emit(report::resonance_table(v, hits));
    } else if (*alp) {
      const auto v = potential_arg(pot, xi);
      const double theta = number("--theta", theta_s);
      ResonanceOptions opt;
      opt.ode_tol = ode_tol;
      const auto hit = locate_resonance(v, theta, member_tol, opt);
      report::Table t({"theta", "omega", "alpha", "alpha_per_omega"});
      const double row[] = {hit.theta, omega, robin_alpha(v, hit, omega),
                            robin_alpha(v, hit, 1.0)};
      t.add_numbers(row);
      if (!eps_s.empty()) {
        const auto e = eps_list("--eps", eps_s);
        if (e.size() < 3) throw UsageError("--eps: need at least 3 values");
        const auto est = estimate_alpha(v, theta, omega, e, 1e-13, 0.0, member_tol);
        t.columns.push_back("alpha_extrapolated");
        t.rows.back().push_back(report::fmt(est.extrapolated));
      }
      out.emit(t);
    } else if (*ker) {
      const cplx z = complex_arg("--z", z_s, true);
      const auto xs = number_list("--x", xs_s);
      const auto ys = number_list("--y", ys_s);
      std::optional<KernelEval> k;
      if (kind == "scaled") {
        const auto v = potential_arg(pot, xi);
        const double lambda = lambda_s.empty()
                                  ? ScalingLaw{number("--theta", theta_k), omega}.lambda(eps)
                                  : number("--lambda", lambda_s);
        k = kernel_scaled(v, lambda, eps, z, ode_tol);
      } else if (kind == "robin") {
        k = kernel_reference_robin(alpha_ref, z);
      } else {
        k = kernel_reference_dirichlet(z);
      }
      report::Table t({"x", "y", "G_re", "G_im", "dxG_re", "dxG_im"});
      for (double x : xs) {
        for (double y : ys) {
          if (x < 0 || y < 0) throw UsageError("--x/--y: values must be >= 0");
          const cplx g = k->eval(x, y);
          const cplx dg = k->eval_dx(x, y);
          const double row[] = {x, y, g.real(), g.imag(), dg.real(), dg.imag()};
          t.add_numbers(row);
        }
      }
      out.emit(t);
    } else if (*con) {
      const auto v = potential_arg(pot, xi);
      const cplx z = complex_arg("--z", conv_z, true);
      const auto e = eps_list("--eps", conv_eps);
      const auto [a, b] = range("--source", source);
      const auto xg = grid("--grid", x_grid);
      if (remainder && !(*remainder > 1.0 && *remainder < 2.0)) {
        throw UsageError("--remainder: exponent must lie in (1, 2)");
      }
      const ScalingLaw law{number("--theta", conv_theta), omega, remainder, remainder_sign};
      const auto study =
          convergence_study(v, law, z, Source::indicator(a, b), e, xg, ode_tol, member_tol);
      out.emit(report::convergence_table(study));
      std::cerr << "reference=" << study.limit.name();
      if (study.limit.is_robin()) std::cerr << " alpha=" << report::fmt(study.limit.alpha);
      std::cerr << " empirical_order=" << report::fmt(study.empirical_order)
                << " monotone=" << (study.monotone ? "yes" : "no") << "\n";
    } else if (*air) {
      out.emit(report::airy_table(grid("--grid", airy_grid)));
    } else if (*c3) {
      const auto v = potential_arg(pot, xi);
      ResonanceOptions opt;
      opt.ode_tol = ode_tol;
      const auto c = classify_3d(v, number("--theta", c3_theta), omega, member_tol, r_max,
                                 points, opt);
      report::Table t({"theta", "omega", "verdict", "alpha", "alpha_per_omega"});
      const double inf = std::numeric_limits<double>::infinity();
      t.add({report::fmt(c.hit ? c.hit->theta : c.theta), report::fmt(omega),
             c.resonant() ? "resonant" : "non_resonant", report::fmt(c.alpha.value_or(inf)),
             report::fmt(c.alpha_per_omega.value_or(inf))});
      out.emit(t);
      if (!profile_path.empty()) {
        if (!c.resonant()) throw Error(ErrorKind::NotResonant, "no profile for a non-resonant case");
        report::write_file(profile_path, report::profile_table(c.profile).to_csv());
      }
    } else if (*sx) {
      const auto xis = number_list("--xi", xi_list);
      const auto [lo, hi] = range("--theta-range", sx_range);
      report::Table t({"xi", "k", "theta_airy", "theta_ode", "discrepancy", "alpha_per_omega",
                       "alpha_ode_per_omega", "alpha"});
      for (double x : xis) {
        const auto v = Potential::linear(x);
        const auto airy_roots = linear_resonances(x, lo, hi, roots);
        ResonanceOptions opt;
        opt.ode_tol = ode_tol;
        opt.root_tol = 1e-11;
        const auto hits = find_resonances(v, lo, hi, roots, opt);
        for (std::size_t i = 0; i < airy_roots.size(); ++i) {
          const double th = airy_roots[i];
          const double th_ode = i < hits.size() ? hits[i].theta : std::nan("");
          const double a1 = alpha_linear(x, th, 1.0);
          const double a_ode = i < hits.size() ? robin_alpha(v, hits[i], 1.0) : std::nan("");
          const double row[] = {x, static_cast<double>(i), th, th_ode, std::abs(th - th_ode),
                                a1, a_ode, omega * a1};
          t.add_numbers(row);
        }
      }
      out.emit(t);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
