#include "qshutter/commands.hpp"
#include "qshutter/errors.hpp"
#include "qshutter/specfun.hpp"
#include "qshutter/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qshutter;

PYBIND11_MODULE(_core, m)
{
    m.doc() = "shutter-release matter wave: densities, phase-space and tomographic views";

    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<quadrature_error>(m, "QuadratureError", PyExc_ArithmeticError);

    m.def(
        "fresnel",
        [](double w) {
            fresnel_pair f = fresnel(w);
            return py::make_tuple(f.c, f.s);
        },
        py::arg("w"), "Fresnel pair (C, S), odd, limits +-1/2");
    m.def("erfc_complex", &erfc_complex, py::arg("z"));
    m.def("sinc", &sinc, py::arg("z"));

    m.def(
        "w_of", [](double x, double t, double k) { return w_of({x, t}, k); }, py::arg("x"),
        py::arg("t"), py::arg("k"));
    m.def(
        "m_amplitude",
        [](double x, double t, double k, double eps) {
            return m_amplitude({x, t}, {k, eps});
        },
        py::arg("x"), py::arg("t"), py::arg("k"), py::arg("eps") = 0.0);
    m.def("m_density", &m_density, py::arg("w"));
    m.def(
        "m_via_propagator",
        [](double x, double t, double k, double eps) {
            return m_via_propagator({x, t}, {k, eps}, quad_config{1e-9, 1e-9, 1200, 6});
        },
        py::arg("x"), py::arg("t"), py::arg("k"), py::arg("eps"));

    m.def(
        "wigner_closed",
        [](double x, double p, double k, double t) { return wigner_closed({x, p}, k, t); },
        py::arg("x"), py::arg("p"), py::arg("k"), py::arg("t"));
    m.def(
        "wigner_cgs",
        [](double x, double p, double k, double t, double hbar, double mass) {
            return wigner_cgs({x, p}, k, t, {hbar, mass});
        },
        py::arg("x"), py::arg("p"), py::arg("k"), py::arg("t"), py::arg("hbar") = 1.0,
        py::arg("mass") = 1.0);
    m.def(
        "wigner_oracle",
        [](double x, double p, double k, double t, double eps) {
            return wigner_oracle({x, p}, {k, eps}, t, quad_config{1e-7, 1e-9, 4000, 8});
        },
        py::arg("x"), py::arg("p"), py::arg("k"), py::arg("t"), py::arg("eps"));
    m.def(
        "wigner_marginal",
        [](double x, double k, double t) {
            return wigner_marginal(x, k, t, quad_config{1e-9, 1e-9, 1200, 6});
        },
        py::arg("x"), py::arg("k"), py::arg("t"));
    m.def(
        "classical_concentration",
        [](double k, double t, double x, double hbar, double mass, double delta) {
            return classical_concentration(k, t, x, {hbar, mass}, delta);
        },
        py::arg("k"), py::arg("t"), py::arg("x"), py::arg("hbar"), py::arg("mass") = 1.0,
        py::arg("delta") = 0.05);

    m.def(
        "frame_from_angles",
        [](double tau, double theta) {
            frame f = frame_from_angles(tau, theta);
            return py::make_tuple(f.mu, f.nu);
        },
        py::arg("tau"), py::arg("theta"));
    m.def(
        "canonical_map",
        [](double tau, double theta, double x, double p) {
            phase_point out = canonical_map(tau, theta, {x, p});
            return py::make_tuple(out.x, out.p);
        },
        py::arg("tau"), py::arg("theta"), py::arg("x"), py::arg("p"));
    m.def(
        "rho_of",
        [](double X, double mu, double nu, double k, double t) {
            return rho_of({X, {mu, nu}, k, t});
        },
        py::arg("X"), py::arg("mu"), py::arg("nu"), py::arg("k"), py::arg("t"));
    m.def(
        "tomogram_closed",
        [](double X, double mu, double nu, double k, double t) {
            return tomogram_closed({X, {mu, nu}, k, t});
        },
        py::arg("X"), py::arg("mu"), py::arg("nu"), py::arg("k"), py::arg("t"));
    m.def(
        "chi_closed",
        [](double X, double mu, double nu, double k, double t) {
            return chi_closed({X, {mu, nu}, k, t});
        },
        py::arg("X"), py::arg("mu"), py::arg("nu"), py::arg("k"), py::arg("t"));
    m.def(
        "chi_oracle",
        [](double X, double mu, double nu, double k, double t, double eps) {
            return chi_oracle({X, {mu, nu}, k, t}, {k, eps}, quad_config{2e-5, 1e-9, 4000, 8});
        },
        py::arg("X"), py::arg("mu"), py::arg("nu"), py::arg("k"), py::arg("t"), py::arg("eps"));
    m.def("tomogram_from_chi", &tomogram_from_chi, py::arg("chi"), py::arg("nu"));

    m.def(
        "verify",
        [](bool full) {
            verify_report r = run_verify(full);
            py::list rows;
            for (const check_row& row : r.rows) {
                py::dict d;
                d["name"] = row.name;
                d["max_error"] = row.max_error;
                d["tolerance"] = row.tolerance;
                d["pass"] = row.pass;
                rows.append(d);
            }
            return rows;
        },
        py::arg("full") = false);
}
