#include "qshutter/shutter.hpp"
#include "qshutter/errors.hpp"
#include "qshutter/specfun.hpp"

#include <cmath>

namespace qshutter {

namespace {
using cplx = std::complex<double>;
const cplx i_unit{0.0, 1.0};
const double inv_sqrt2 = 0.70710678118654752440;
const cplx phase_m45{inv_sqrt2, -inv_sqrt2}; // exp(-i pi/4)

void require_time(double t)
{
    if (!(t > 0.0))
        throw domain_error("shutter: requires t > 0");
}
} // namespace

double step(double x)
{
    if (x > 0.0)
        return 1.0;
    if (x < 0.0)
        return 0.0;
    return 0.5;
}

double w_of(const spacetime_point& p, double k)
{
    require_time(p.t);
    return (p.x - k * p.t) / std::sqrt(2.0 * p.t);
}

std::complex<double> m_amplitude(const spacetime_point& p, const shutter_params& sp)
{
    require_time(p.t);
    if (sp.eps < 0.0)
        throw domain_error("m_amplitude: eps must be >= 0");
    if (sp.eps == 0.0) {
        double w = w_of(p, sp.k);
        fresnel_pair f = fresnel(w);
        cplx plane = std::exp(i_unit * (sp.k * p.x - 0.5 * sp.k * sp.k * p.t));
        return phase_m45 * plane * inv_sqrt2 * cplx{0.5 - f.c, 0.5 - f.s};
    }
    cplx kc = sp.k - i_unit * sp.eps;
    cplx wc = (p.x - kc * p.t) / std::sqrt(2.0 * p.t);
    cplx plane = std::exp(i_unit * (kc * p.x - 0.5 * kc * kc * p.t));
    return 0.5 * plane * erfc_complex(phase_m45 * wc);
}

double m_density(double w)
{
    fresnel_pair f = fresnel(w);
    double a = 0.5 - f.c;
    double b = 0.5 - f.s;
    return 0.5 * (a * a + b * b);
}

std::complex<double> propagator(double x, double xp, double t)
{
    require_time(t);
    double d = x - xp;
    return phase_m45 / std::sqrt(2.0 * M_PI * t) * std::exp(i_unit * (d * d / (2.0 * t)));
}

std::complex<double> m_via_propagator(const spacetime_point& p, const shutter_params& sp,
                                      const quad_config& cfg)
{
    require_time(p.t);
    if (!(sp.eps > 0.0))
        throw domain_error("m_via_propagator: eps must be > 0 for a convergent integral");
    double t = p.t, x = p.x, k = sp.k, eps = sp.eps;
    double amp = 1.0 / std::sqrt(2.0 * M_PI * t);
    // source at x' = -s, s > 0: phase (x + s)^2 / (2 t) - k s, damping exp(-eps s)
    integrand f = [=](double s) {
        double xs = x + s;
        return amp * phase_m45 * std::exp(i_unit * (xs * xs / (2.0 * t) - k * s) - eps * s);
    };
    quadratic_phase_zeros zeros(1.0 / (2.0 * t), x / t - k, 0.0);
    return integrate_oscillatory_halfline(f, zeros, cfg).value;
}

} // namespace qshutter
