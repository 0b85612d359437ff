#include "qshutter/wigner.hpp"
#include "qshutter/errors.hpp"
#include "qshutter/specfun.hpp"

#include <cmath>

namespace qshutter {

namespace {
using cplx = std::complex<double>;
const cplx i_unit{0.0, 1.0};

void require_time(double t)
{
    if (!(t > 0.0))
        throw domain_error("wigner: requires t > 0");
}

void require_units(const physical_units& u)
{
    if (!(u.hbar > 0.0) || !(u.mass > 0.0))
        throw domain_error("wigner: hbar and mass must be > 0");
}
} // namespace

double wigner_closed(const phase_point& pp, double k, double t)
{
    require_time(t);
    double u = pp.p * t - pp.x;
    if (u <= 0.0)
        return 0.0;
    return (2.0 * u / M_PI) * sinc(2.0 * u * (k - pp.p));
}

double wigner_cgs(const phase_point& pp, double k, double t, const physical_units& units)
{
    require_time(t);
    require_units(units);
    double front = pp.p * t / units.mass - pp.x;
    if (front <= 0.0)
        return 0.0;
    double g = 2.0 * front / units.hbar;
    return (g / M_PI) * sinc(g * (k - pp.p));
}

double wigner_oracle(const phase_point& pp, const shutter_params& sp, double t,
                     const quad_config& cfg)
{
    require_time(t);
    if (!(sp.eps > 0.0))
        throw domain_error("wigner_oracle: eps must be > 0");
    const double x = pp.x, p = pp.p, k = sp.k;
    auto m_at = [&](double xx) { return m_amplitude({xx, t}, sp); };

    integrand plus = [&](double y) {
        return std::conj(m_at(x + y)) * m_at(x - y) * std::exp(i_unit * (2.0 * p * y)) / M_PI;
    };
    integrand minus = [&](double s) {
        return std::conj(m_at(x - s)) * m_at(x + s) * std::exp(-i_unit * (2.0 * p * s)) / M_PI;
    };
    // large-|y| phase of the products, used only to pace the segmentation
    quadratic_phase_zeros zp(-1.0 / (2.0 * t), 2.0 * p - k - x / t, 0.0);
    quadratic_phase_zeros zm(1.0 / (2.0 * t), x / t + k - 2.0 * p, 0.0);

    osc_result rp = integrate_oscillatory_halfline(plus, zp, cfg);
    osc_result rm = integrate_oscillatory_halfline(minus, zm, cfg);
    cplx w = rp.value + rm.value;
    double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(w));
    if (std::abs(w.imag()) > 10.0 * std::max(tol, rp.error_estimate + rm.error_estimate))
        throw quadrature_error("wigner_oracle: result has a non-negligible imaginary part", w,
                               std::abs(w.imag()));
    return w.real();
}

double wigner_marginal(double x, double k, double t, const quad_config& cfg)
{
    require_time(t);
    integrand f = [=](double p) {
        double u = p * t - x;
        if (u <= 0.0)
            return cplx{0.0, 0.0};
        return cplx{(2.0 * u / M_PI) * sinc(2.0 * u * (k - p)), 0.0};
    };
    // sine-factor phase 2(pt-x)(k-p); boundaries are its consecutive zeros
    quadratic_phase_zeros zeros(-2.0 * t, 2.0 * (k * t + x), x / t);
    return integrate_oscillatory_halfline(f, zeros, cfg).value.real();
}

double classical_concentration(double k, double t, double x, const physical_units& units,
                               double delta)
{
    require_time(t);
    require_units(units);
    if (!(x < k * t / units.mass))
        throw domain_error("classical_concentration: requires x < k t / mass");
    if (!(delta > 0.0))
        throw domain_error("classical_concentration: delta must be > 0");
    double box = 10.0 * delta;
    integrand f = [&](double p) { return cplx{wigner_cgs({x, p}, k, t, units), 0.0}; };
    quad_config icfg{1e-9, 1e-9, 4000, 6};
    double num = integrate_adaptive(f, k - delta, k + delta, icfg).value.real();
    double den = integrate_adaptive(f, k - box, k + box, icfg).value.real();
    return num / den;
}

} // namespace qshutter
