#include "qshutter/tomogram.hpp"
#include "qshutter/errors.hpp"
#include "qshutter/specfun.hpp"

#include <cmath>

namespace qshutter {

namespace {
using cplx = std::complex<double>;
const cplx i_unit{0.0, 1.0};
const double inv_sqrt2 = 0.70710678118654752440;
const cplx phase_p45{inv_sqrt2, inv_sqrt2}; // exp(i pi/4)

double admissible(const tomogram_point& tp)
{
    if (!(tp.t > 0.0))
        throw domain_error("tomogram: requires t > 0");
    double q = tp.fr.mu * (tp.fr.mu * tp.t + tp.fr.nu);
    if (!(q > 0.0))
        throw domain_error("tomogram: frame singular, requires mu*(mu*t + nu) > 0");
    return q;
}
} // namespace

frame frame_from_angles(double tau, double theta)
{
    return {std::exp(tau) * std::cos(theta), std::exp(-tau) * std::sin(theta)};
}

phase_point canonical_map(double tau, double theta, const phase_point& pp)
{
    double ep = std::exp(tau), em = std::exp(-tau);
    double c = std::cos(theta), s = std::sin(theta);
    return {ep * c * pp.x + em * s * pp.p, -ep * s * pp.x + em * c * pp.p};
}

double rho_of(const tomogram_point& tp)
{
    double q = admissible(tp);
    return (tp.k * (tp.fr.mu * tp.t + tp.fr.nu) - tp.X) / std::sqrt(2.0 * q);
}

double tomogram_closed(const tomogram_point& tp)
{
    double rho = rho_of(tp);
    fresnel_pair f = fresnel(rho);
    double a = 0.5 + f.c;
    double b = 0.5 + f.s;
    return (a * a + b * b) / (2.0 * std::abs(tp.fr.mu));
}

std::complex<double> chi_closed(const tomogram_point& tp)
{
    double rho = rho_of(tp);
    double mu = tp.fr.mu, nu = tp.fr.nu;
    if (nu == 0.0)
        throw domain_error("chi_closed: requires nu != 0");
    fresnel_pair f = fresnel(rho);
    cplx pref = std::sqrt(cplx{M_PI * nu / mu, 0.0}) * phase_p45;
    cplx quad_phase =
        std::exp(-i_unit * (tp.X * tp.X * tp.t / (2.0 * nu * (mu * tp.t + nu))));
    cplx rho_phase = std::exp(-i_unit * (rho * rho));
    return pref * quad_phase * rho_phase * cplx{0.5 + f.c, 0.5 + f.s};
}

std::complex<double> chi_oracle(const tomogram_point& tp, const shutter_params& sp,
                                const quad_config& cfg)
{
    if (!(tp.t > 0.0))
        throw domain_error("chi_oracle: requires t > 0");
    double mu = tp.fr.mu, nu = tp.fr.nu, X = tp.X, t = tp.t;
    if (nu == 0.0)
        throw domain_error("chi_oracle: requires nu != 0");
    if (!(sp.eps > 0.0))
        throw domain_error("chi_oracle: eps must be > 0");

    integrand plus = [=](double u) {
        return m_amplitude({u, t}, sp) *
               std::exp(i_unit * (mu * u * u / (2.0 * nu) - u * X / nu));
    };
    integrand minus = [=](double s) {
        return m_amplitude({-s, t}, sp) *
               std::exp(i_unit * (mu * s * s / (2.0 * nu) + s * X / nu));
    };
    quadratic_phase_zeros zp(mu / (2.0 * nu) + 1.0 / (2.0 * t), -X / nu, 0.0);
    quadratic_phase_zeros zm(mu / (2.0 * nu), X / nu - sp.k, 0.0);
    return integrate_oscillatory_halfline(plus, zp, cfg).value +
           integrate_oscillatory_halfline(minus, zm, cfg).value;
}

double tomogram_from_chi(std::complex<double> chi, double nu)
{
    if (nu == 0.0)
        throw domain_error("tomogram_from_chi: requires nu != 0");
    return std::norm(chi) / (2.0 * M_PI * std::abs(nu));
}

} // namespace qshutter
