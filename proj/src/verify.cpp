#include "qshutter/verify.hpp"
#include "qshutter/errors.hpp"
#include "qshutter/specfun.hpp"
#include "qshutter/shutter.hpp"
#include "qshutter/tomogram.hpp"
#include "qshutter/wigner.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <random>

namespace qshutter {

namespace {

using cplx = std::complex<double>;
const cplx i_unit{0.0, 1.0};

// test-harness hook: a nonzero bias breaks the odd symmetry on purpose so the
// failure path of the report can be exercised end to end
double fresnel_bias()
{
    const char* s = std::getenv("QSHUTTER_VERIFY_FRESNEL_BIAS");
    return s ? std::strtod(s, nullptr) : 0.0;
}

fresnel_pair probe_fresnel(double w)
{
    fresnel_pair f = fresnel(w);
    if (w > 0.0)
        f.c += fresnel_bias();
    return f;
}

void add(verify_report& r, const std::string& name, double err, double tol)
{
    r.rows.push_back({name, err, tol, std::isfinite(err) && err <= tol});
}

const quad_config oracle_cfg{1e-7, 1e-9, 4000, 8};
// behind the shutter the chi integrand keeps the plane-wave modulus, so its
// accelerated increments level off around 1.5e-5 and a tighter goal never lands
const quad_config chi_cfg{2e-5, 1e-9, 4000, 8};
const quad_config marginal_cfg{1e-9, 1e-9, 1200, 6};
const std::vector<double> eps_ladder{4e-3, 2e-3, 1e-3};

void check_fresnel_reflection(verify_report& r)
{
    double worst = 0.0;
    for (int i = 1; i <= 120; ++i) {
        double w = 0.05 * double(i); // up to w = 6
        fresnel_pair a = probe_fresnel(w);
        fresnel_pair b = probe_fresnel(-w);
        worst = std::max({worst, std::abs(a.c + b.c), std::abs(a.s + b.s)});
    }
    add(r, "fresnel_reflection", worst, 1e-12);
}

void check_amplitude_consistency(verify_report& r)
{
    std::mt19937 gen(101);
    std::uniform_real_distribution<double> ux(-8.0, 8.0), ut(0.2, 5.0);
    const cplx e_m45 = std::exp(-i_unit * (M_PI / 4.0));
    double worst = 0.0;
    for (double k : {0.5, 1.0, 2.0}) {
        for (int i = 0; i < 10; ++i) {
            double x = ux(gen), t = ut(gen);
            cplx via_fresnel = m_amplitude({x, t}, {k, 0.0});
            double w = w_of({x, t}, k);
            cplx via_erfc = 0.5 * std::exp(i_unit * (k * x - 0.5 * k * k * t)) *
                            erfc_complex(e_m45 * w);
            worst = std::max(worst, std::abs(via_fresnel - via_erfc));
        }
    }
    add(r, "amplitude_erfc_consistency", worst, 1e-12);
}

void check_density_identity(verify_report& r, bool full)
{
    int n = full ? 100 : 20;
    double worst = 0.0;
    for (double k : {0.5, 1.0, 2.0}) {
        for (int i = 0; i < n; ++i) {
            double x = -10.0 + 20.0 * double(i) / double(n - 1);
            for (int j = 0; j < n; ++j) {
                double t = 0.1 + 9.9 * double(j) / double(n - 1);
                double d1 = std::norm(m_amplitude({x, t}, {k, 0.0}));
                double d2 = m_density(w_of({x, t}, k));
                worst = std::max(worst, std::abs(d1 - d2));
            }
        }
    }
    add(r, "density_identity", worst, 1e-12);
}

void check_front_value(verify_report& r)
{
    double worst = 0.0;
    for (double k : {0.5, 1.0, 2.0})
        for (double t : {0.5, 2.0, 10.0}) {
            double d = m_density(w_of({k * t, t}, k));
            worst = std::max(worst, std::abs(d - 0.25));
        }
    add(r, "front_density_quarter", worst, 1e-12);
}

void check_propagator(verify_report& r, bool full)
{
    std::mt19937 gen(202);
    std::uniform_real_distribution<double> ux(-5.0, 5.0), ut(0.3, 3.0);
    std::vector<double> eps_list = full ? std::vector<double>{1e-2, 1e-3}
                                        : std::vector<double>{1e-2};
    quad_config cfg{1e-9, 1e-9, 1200, 6};
    double worst = 0.0;
    for (double eps : eps_list) {
        for (int i = 0; i < 20; ++i) {
            double x = ux(gen), t = ut(gen);
            double k = (i % 2) ? 2.0 : 1.0;
            shutter_params sp{k, eps};
            cplx rebuilt = m_via_propagator({x, t}, sp, cfg);
            worst = std::max(worst, std::abs(rebuilt - m_amplitude({x, t}, sp)));
        }
    }
    add(r, "propagator_equivalence", worst, 1e-6);
}

const std::vector<phase_point> wigner_pts{
    {0.0, 1.0}, {0.0, 2.0}, {-1.0, 0.5}, {-2.0, 1.0}, {0.5, 1.5}, {0.9, 1.0}};

void check_wigner_oracle(verify_report& r, bool full)
{
    const double k = 1.0, t = 1.0;
    double worst = 0.0;
    for (const phase_point& pp : wigner_pts) {
        double closed = wigner_closed(pp, k, t);
        if (full) {
            std::vector<std::pair<double, cplx>> samples;
            for (double eps : eps_ladder)
                samples.emplace_back(eps, wigner_oracle(pp, {k, eps}, t, oracle_cfg));
            worst = std::max(worst, std::abs(richardson_extrapolate(samples).real() - closed));
        } else {
            double eps = 1e-2;
            double u = pp.p * t - pp.x;
            double damped = u > 0.0 ? std::exp(-2.0 * eps * u) * closed : 0.0;
            worst = std::max(worst,
                             std::abs(wigner_oracle(pp, {k, eps}, t, oracle_cfg) - damped));
        }
    }
    add(r, "wigner_oracle_equivalence", worst, 1e-4);
}

void check_wigner_support(verify_report& r, bool full)
{
    std::mt19937 gen(303);
    std::uniform_real_distribution<double> ux(0.0, 10.0), up(-3.0, 3.0), ut(0.1, 5.0);
    int n = full ? 10000 : 1000;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double p = up(gen), t = ut(gen);
        double x = p * t + ux(gen) + 1e-9; // strictly beyond the front
        worst = std::max(worst, std::abs(wigner_closed({x, p}, 1.0, t)));
    }
    add(r, "wigner_causal_support", worst, 0.0);
}

void check_wigner_negativity(verify_report& r)
{
    double min_w = 1e300;
    for (int i = 0; i < 41; ++i)
        for (int j = 0; j < 41; ++j) {
            double x = -2.0 + 4.0 * double(i) / 40.0;
            double p = -1.0 + 4.0 * double(j) / 40.0;
            min_w = std::min(min_w, wigner_closed({x, p}, 1.0, 1.0));
        }
    r.rows.push_back({"wigner_negative_witness", min_w, 0.0, min_w < 0.0});
}

void check_marginal(verify_report& r, bool full)
{
    const double k = 1.0, t = 2.0, root = std::sqrt(2.0 * t);
    double worst_core = 0.0, worst_tail = 0.0;
    int n = full ? 20 : 3;
    for (int i = 0; i < n; ++i) {
        double w = full ? (-5.0 + 10.0 * double(i) / double(n - 1))
                        : (-1.0 + 1.0 * double(i));
        double x = k * t + w * root;
        double err = std::abs(wigner_marginal(x, k, t, marginal_cfg) - m_density(w));
        double& slot = std::abs(w) <= 2.0 ? worst_core : worst_tail;
        slot = std::max(slot, err);
    }
    add(r, "wigner_marginal_core", worst_core, 1e-3);
    if (full)
        add(r, "wigner_marginal_tail", worst_tail, 2e-2);
}

void check_frame_reduction(verify_report& r, bool full)
{
    const double k = 1.0, t = 2.0;
    int n = full ? 200 : 50;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double X = k * t + (-10.0 + 20.0 * double(i) / double(n - 1)) * std::sqrt(t);
        double tg = tomogram_closed({X, {1.0, 0.0}, k, t});
        worst = std::max(worst, std::abs(tg - m_density(w_of({X, t}, k))));
    }
    add(r, "tomogram_frame_reduction", worst, 1e-12);
}

frame random_admissible(std::mt19937& gen, double t)
{
    std::uniform_real_distribution<double> umu(0.2, 3.0), unu(0.0, 1.0);
    double mu = umu(gen);
    double nu = -0.9 * mu * t + unu(gen) * (3.0 + 0.9 * mu * t);
    return {mu, nu};
}

void check_tomogram_positivity(verify_report& r, bool full)
{
    std::mt19937 gen(404);
    std::uniform_real_distribution<double> uX(-10.0, 10.0), ut(0.3, 5.0);
    int n = full ? 10000 : 1000;
    double min_val = 1e300;
    for (int i = 0; i < n; ++i) {
        double t = ut(gen);
        double k = (i % 3 == 0) ? 0.5 : (i % 3 == 1) ? 1.0 : 2.0;
        min_val = std::min(min_val, tomogram_closed({uX(gen), random_admissible(gen, t), k, t}));
    }
    add(r, "tomogram_positivity", std::max(0.0, -min_val), 0.0);
}

void check_chi_modulus(verify_report& r)
{
    std::mt19937 gen(505);
    std::uniform_real_distribution<double> uX(-10.0, 10.0), ut(0.3, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        double t = ut(gen), k = 1.0;
        frame fr = random_admissible(gen, t);
        if (fr.nu == 0.0)
            continue;
        tomogram_point tp{uX(gen), fr, k, t};
        double via_chi = tomogram_from_chi(chi_closed(tp), fr.nu);
        worst = std::max(worst, std::abs(via_chi - tomogram_closed(tp)));
    }
    add(r, "chi_modulus_identity", worst, 1e-12);
}

const std::vector<tomogram_point> chi_pts{
    {1.0, {1.0, 0.5}, 1.0, 1.0},  {0.0, {1.0, 0.5}, 1.0, 1.0},
    {2.0, {1.0, 1.0}, 1.0, 1.0},  {-1.0, {0.5, 0.3}, 1.0, 1.0},
    {0.5, {2.0, -0.5}, 1.0, 1.0}};

void check_chi_oracle(verify_report& r, bool full)
{
    double worst = 0.0;
    int n = full ? int(chi_pts.size()) : 3;
    for (int i = 0; i < n; ++i) {
        const tomogram_point& tp = chi_pts[std::size_t(i)];
        double target = tomogram_closed(tp);
        double got;
        if (full) {
            std::vector<std::pair<double, cplx>> samples;
            for (double eps : eps_ladder) {
                cplx chi = chi_oracle(tp, {tp.k, eps}, chi_cfg);
                samples.emplace_back(eps, cplx{std::norm(chi), 0.0});
            }
            got = richardson_extrapolate(samples).real() /
                  (2.0 * M_PI * std::abs(tp.fr.nu));
        } else {
            got = tomogram_from_chi(chi_oracle(tp, {tp.k, 1e-2}, chi_cfg), tp.fr.nu);
        }
        worst = std::max(worst, std::abs(got - target));
    }
    add(r, "chi_oracle_equivalence", worst, full ? 1e-3 : 5e-2);
}

void check_quad_references(verify_report& r)
{
    quadratic_phase_zeros zeros(1.0, 0.0, 0.0);
    integrand fresnel_kernel = [](double y) { return std::exp(i_unit * (y * y)); };
    cplx v = integrate_oscillatory_halfline(fresnel_kernel, zeros, {1e-10, 1e-10, 600, 6}).value;
    double e1 = std::abs(v.imag() - std::sqrt(M_PI / 8.0));
    double e2 = std::abs(v.real() - std::sqrt(M_PI / 8.0));

    quadratic_phase_zeros lin(0.0, 1.0, 0.0);
    integrand dirichlet = [](double y) { return cplx{sinc(y), 0.0}; };
    cplx s = integrate_oscillatory_halfline(dirichlet, lin, {1e-10, 1e-10, 600, 6}).value;
    double e3 = std::abs(s.real() - M_PI / 2.0);
    add(r, "quad_reference_integrals", std::max({e1, e2, e3}), 1e-8);
}

void check_canonical_map(verify_report& r)
{
    std::mt19937 gen(606);
    std::uniform_real_distribution<double> utau(-1.5, 1.5), uth(0.0, 2.0 * M_PI);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        double tau = utau(gen), theta = uth(gen);
        phase_point e1 = canonical_map(tau, theta, {1.0, 0.0});
        phase_point e2 = canonical_map(tau, theta, {0.0, 1.0});
        double det = e1.x * e2.p - e2.x * e1.p;
        worst = std::max(worst, std::abs(det - 1.0));
    }
    add(r, "canonical_map_determinant", worst, 1e-13);
}

} // namespace

bool verify_report::all_pass() const
{
    for (const check_row& row : rows)
        if (!row.pass)
            return false;
    return !rows.empty();
}

verify_report run_verify(bool full)
{
    auto t0 = std::chrono::steady_clock::now();
    verify_report r;
    r.full = full;
    check_fresnel_reflection(r);
    check_amplitude_consistency(r);
    check_density_identity(r, full);
    check_front_value(r);
    check_propagator(r, full);
    check_wigner_oracle(r, full);
    check_wigner_support(r, full);
    check_wigner_negativity(r);
    check_marginal(r, full);
    check_frame_reduction(r, full);
    check_tomogram_positivity(r, full);
    check_chi_modulus(r);
    check_chi_oracle(r, full);
    check_quad_references(r);
    check_canonical_map(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string format_report(const verify_report& r)
{
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "%-28s %12s %11s  %s\n", "check", "max_error", "tolerance",
                  "status");
    out += line;
    for (const check_row& row : r.rows) {
        std::snprintf(line, sizeof line, "%-28s %12.3e %11.1e  %s\n", row.name.c_str(),
                      row.max_error, row.tolerance, row.pass ? "pass" : "FAIL");
        out += line;
    }
    std::snprintf(line, sizeof line, "%s verification %s in %.1f s\n", r.full ? "full" : "quick",
                  r.all_pass() ? "passed" : "FAILED", r.seconds);
    out += line;
    if (r.full && r.seconds > 120.0)
        out += "warning: full verification exceeded the 120 s budget\n";
    return out;
}

} // namespace qshutter
