#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deltalim/airy.hpp"
#include "deltalim/errors.hpp"
#include "deltalim/potential.hpp"
#include "deltalim/radial3d.hpp"
#include "deltalim/report.hpp"
#include "deltalim/resolvent.hpp"
#include "deltalim/resonance.hpp"

namespace py = pybind11;
using namespace deltalim;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Resonances, Robin parameters and resolvent kernels of scaled half-line "
            "Schroedinger operators";

  // Messages carry the error name prefix, e.g. "NotAResonance: ...".
  py::register_exception<Error>(m, "DeltalimError");

  py::class_<Potential>(m, "Potential")
      .def_static("square", &Potential::square)
      .def_static("linear", &Potential::linear, py::arg("xi"))
      .def_static("zero", &Potential::zero, py::arg("support_end") = 1.0)
      .def_static(
          "piecewise",
          [](std::vector<double> bps, std::vector<std::vector<double>> rows) {
            std::vector<Cubic> pieces;
            for (const auto& r : rows) {
              if (r.size() > 4) throw Error(ErrorKind::InvalidArgument, "at most 4 coefficients");
              Cubic c;
              for (std::size_t i = 0; i < r.size(); ++i) c.c[i] = r[i];
              pieces.push_back(c);
            }
            return Potential::piecewise(std::move(bps), std::move(pieces));
          },
          py::arg("breakpoints"), py::arg("coeffs"))
      .def_static("from_json", &potential_from_json)
      .def("to_json", &potential_to_json)
      .def("__call__", &Potential::eval)
      .def_property_readonly("breakpoints", [](const Potential& v) {
        return std::vector<double>(v.breakpoints().begin(), v.breakpoints().end());
      })
      .def_property_readonly("support_end", &Potential::support_end)
      .def("__repr__", &Potential::describe);

  py::class_<ResonanceHit>(m, "ResonanceHit")
      .def_readonly("theta", &ResonanceHit::theta)
      .def_readonly("residual", &ResonanceHit::residual)
      .def_readonly("psi_M", &ResonanceHit::psi_M)
      .def_readonly("integral_I", &ResonanceHit::integral_I)
      .def_readonly("integral_J", &ResonanceHit::integral_J)
      .def_readonly("dG_dtheta", &ResonanceHit::dG_dtheta)
      .def_property_readonly("bracket", [](const ResonanceHit& h) {
        return std::make_pair(h.bracket_lo, h.bracket_hi);
      });

  m.def(
      "shoot_residual",
      [](const Potential& v, double theta, double tol) {
        const auto e = shoot_residual(v, theta, tol);
        return std::make_pair(e.psi_M, e.dpsi_M);
      },
      py::arg("v"), py::arg("theta"), py::arg("tol") = 1e-12);

  m.def(
      "find_resonances",
      [](const Potential& v, double lo, double hi, std::size_t max_hits, double root_tol,
         std::size_t cells) {
        ResonanceOptions opt;
        opt.root_tol = root_tol;
        opt.cells = cells;
        return find_resonances(v, lo, hi, max_hits, opt);
      },
      py::arg("v"), py::arg("lo"), py::arg("hi"), py::arg("max_hits") = 16,
      py::arg("root_tol") = 1e-10, py::arg("cells") = 400);

  m.def(
      "locate_resonance",
      [](const Potential& v, double theta, double tol) { return locate_resonance(v, theta, tol); },
      py::arg("v"), py::arg("theta"), py::arg("tol") = 1e-7);

  m.def("robin_alpha", &robin_alpha, py::arg("v"), py::arg("hit"), py::arg("omega"));

  m.def(
      "classify_scaling",
      [](const Potential& v, double theta, double omega, std::optional<double> remainder,
         double tol) {
        const auto d = classify_scaling(v, ScalingLaw{theta, omega, remainder, 1.0}, tol);
        return py::make_tuple(d.name(), d.is_robin() ? py::object(py::float_(d.alpha))
                                                     : py::object(py::none()));
      },
      py::arg("v"), py::arg("theta"), py::arg("omega"), py::arg("remainder") = py::none(),
      py::arg("tol") = 1e-7);

  m.def(
      "airy",
      [](double x) {
        const auto q = airy_quad(x);
        return py::make_tuple(q.ai, q.dai, q.bi, q.dbi);
      },
      py::arg("x"));
  m.def("upsilon_linear_residual", &upsilon_linear_residual, py::arg("xi"), py::arg("theta"));
  m.def("alpha_linear", &alpha_linear, py::arg("xi"), py::arg("theta"), py::arg("omega") = 1.0,
        py::arg("residual_tol") = 1e-8);
  m.def("linear_resonances", &linear_resonances, py::arg("xi"), py::arg("lo"), py::arg("hi"),
        py::arg("max_roots") = 4, py::arg("cells") = 400, py::arg("root_tol") = 1e-13);
  m.def(
      "psi_linear",
      [](double xi, double theta, double x) {
        const auto p = psi_linear_closed(xi, theta, x);
        return std::make_pair(p.value, p.derivative);
      },
      py::arg("xi"), py::arg("theta"), py::arg("x"));

  py::class_<KernelEval>(m, "Kernel")
      .def_property_readonly("kind", &KernelEval::kind_name)
      .def_property_readonly("z", &KernelEval::z)
      .def_property_readonly("wronskian", &KernelEval::wronskian)
      .def("__call__", &KernelEval::eval, py::arg("x"), py::arg("y"))
      .def("dx", &KernelEval::eval_dx, py::arg("x"), py::arg("y"), py::arg("side") = 0)
      .def(
          "apply_indicator",
          [](const KernelEval& k, double a, double b, std::vector<double> xs) {
            return apply_resolvent(k, Source::indicator(a, b), xs);
          },
          py::arg("a"), py::arg("b"), py::arg("x"));

  m.def("kernel_scaled", &kernel_scaled, py::arg("v"), py::arg("lam"), py::arg("eps"),
        py::arg("z"), py::arg("tol") = 1e-12);
  m.def("kernel_robin", &kernel_reference_robin, py::arg("alpha"), py::arg("z"));
  m.def("kernel_dirichlet", &kernel_reference_dirichlet, py::arg("z"));

  m.def(
      "estimate_alpha",
      [](const Potential& v, double theta, double omega, std::vector<double> eps) {
        const auto e = estimate_alpha(v, theta, omega, eps);
        return py::make_tuple(e.alpha, e.extrapolated);
      },
      py::arg("v"), py::arg("theta"), py::arg("omega"), py::arg("eps"));

  m.def(
      "classify_3d",
      [](const Potential& v, double theta, double omega, double tol) {
        const auto c = classify_3d(v, theta, omega, tol);
        py::dict d;
        d["resonant"] = c.resonant();
        d["alpha"] = c.alpha ? py::object(py::float_(*c.alpha)) : py::object(py::none());
        std::vector<std::pair<double, double>> prof;
        for (const auto& s : c.profile) prof.emplace_back(s.r, s.psi);
        d["profile"] = prof;
        return d;
      },
      py::arg("v"), py::arg("theta"), py::arg("omega") = 1.0, py::arg("tol") = 1e-7);
}
