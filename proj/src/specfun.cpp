#include "qshutter/specfun.hpp"

#include <cmath>

namespace qshutter {

namespace {

constexpr double sqrt_pi = 1.7724538509055160273;
constexpr double max_exp = 709.0; // exp() overflow edge for doubles

using cplx = std::complex<double>;

// erf power series, fine while no cancellation is hiding in 1 - erf
cplx erf_series(cplx z)
{
    cplx zz = z * z;
    cplx term = z;
    cplx sum = z;
    for (int n = 1; n <= 300; ++n) {
        term *= -zz / double(n);
        cplx dn = term / double(2 * n + 1);
        sum += dn;
        if (std::abs(dn) < 1e-18 * std::max(1.0, std::abs(sum)))
            break;
    }
    return 2.0 / sqrt_pi * sum;
}

// Faddeeva w(zeta) by the Laplace continued fraction, modified Lentz forward
// recurrence with early termination; converges in <=30 iterations on the
// region the split sends here.
cplx faddeeva_cf(cplx zeta)
{
    const double tiny = 1e-300;
    cplx f = (zeta == 0.0) ? cplx(tiny, 0.0) : zeta;
    cplx C = f;
    cplx D = 0.0;
    for (int n = 1; n <= 200; ++n) {
        double a = -0.5 * double(n);
        D = zeta + a * D;
        if (D == 0.0) D = tiny;
        C = zeta + a / C;
        if (C == 0.0) C = tiny;
        D = 1.0 / D;
        cplx delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-15)
            break;
    }
    return cplx(0.0, 1.0) / sqrt_pi / f;
}

// exp(-z^2) with the real exponent clamped so the result stays finite
cplx exp_minus_zz(cplx z)
{
    cplx zz = z * z;
    double ex = -zz.real();
    if (ex > max_exp) ex = max_exp;
    return std::polar(std::exp(ex), -zz.imag());
}

// int_0^y exp(s^2) ds scaled for y > 4 through the asymptotic series
// e^{y^2}/(2y) (1 + 1/(2y^2) + 3/(4y^4) + ...); exponent clamped.
double exp_integral_tail(double y)
{
    double y2 = y * y;
    double inv = 1.0 / (2.0 * y2);
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n <= 40; ++n) {
        term *= double(2 * n - 1) * inv;
        sum += term;
        if (term < 1e-17 * sum)
            break;
    }
    double ex = y2 > max_exp ? max_exp : y2;
    return std::exp(ex) / (2.0 * y) * sum;
}

// canonical quadrant: Re z >= 0, Im z >= 0
cplx erfc_canonical(cplx z)
{
    double x = z.real();
    double y = z.imag();

    if (y == 0.0)
        return cplx(std::erfc(x), 0.0);

    if (x == 0.0) {
        // erfc(iy) = 1 - i (2/sqrt(pi)) int_0^y e^{s^2} ds, real part exactly 1
        double im;
        if (y <= 4.0) {
            double term = y, sum = y, yy = y * y;
            for (int n = 1; n <= 200; ++n) {
                term *= yy / double(n);
                double dn = term / double(2 * n + 1);
                sum += dn;
                if (dn < 1e-17 * sum)
                    break;
            }
            im = 2.0 / sqrt_pi * sum;
        } else {
            im = 2.0 / sqrt_pi * exp_integral_tail(y);
        }
        return cplx(1.0, -im);
    }

    double az = std::abs(z);
    if (az > 100.0) {
        cplx zz = z * z;
        if (zz.real() > 745.0)
            return cplx(0.0, 0.0); // below double underflow, limit is exact
        cplx zz2 = 2.0 * zz;
        cplx s = 1.0 - 1.0 / zz2 + 3.0 / (zz2 * zz2);
        return exp_minus_zz(z) / (z * sqrt_pi) * s;
    }

    // the power series loses relative accuracy exactly where e^{-z^2} is small
    // (cancellation in 1 - erf); hand that sliver to the continued fraction,
    // which is at its best there.
    if (az <= 4.0 && (x * x - y * y) <= 8.0)
        return 1.0 - erf_series(z);

    return exp_minus_zz(z) * faddeeva_cf(cplx(-y, x)); // arg is i*z
}

} // namespace

std::complex<double> erfc_complex(std::complex<double> z)
{
    if (z.real() < 0.0)
        return 2.0 - erfc_complex(-z);
    if (z.imag() < 0.0)
        return std::conj(erfc_complex(std::conj(z)));
    return erfc_canonical(z);
}

fresnel_pair fresnel(double w)
{
    if (w < 0.0) {
        fresnel_pair p = fresnel(-w);
        return {-p.c, -p.s};
    }
    const double norm = 0.79788456080286535588; // sqrt(2/pi)
    if (w <= 3.0) {
        // Maclaurin: C = sum (-1)^n w^{4n+1} / ((2n)! (4n+1)),
        //            S = sum (-1)^n w^{4n+3} / ((2n+1)! (4n+3)), both * sqrt(2/pi)
        double w2 = w * w;
        double w4 = w2 * w2;
        double tc = w;       // w^{4n+1}/(2n)!
        double ts = w * w2;  // w^{4n+3}/(2n+1)!
        double c = w;
        double s = ts / 3.0;
        for (int n = 1; n <= 60; ++n) {
            tc *= -w4 / double((2 * n - 1) * 2 * n);
            ts *= -w4 / double(2 * n * (2 * n + 1));
            double dc = tc / double(4 * n + 1);
            double ds = ts / double(4 * n + 3);
            c += dc;
            s += ds;
            if (std::abs(dc) < 1e-17 && std::abs(ds) < 1e-17)
                break;
        }
        return {norm * c, norm * s};
    }
    // outer branch through the erfc kernel:
    // int_w^inf e^{iy^2} dy = e^{i pi/4} (sqrt(pi)/2) erfc(e^{-i pi/4} w)
    const std::complex<double> eip4(0.70710678118654752440, 0.70710678118654752440);
    std::complex<double> r = eip4 * (sqrt_pi / 2.0) * erfc_complex(std::conj(eip4) * w);
    return {0.5 - norm * r.real(), 0.5 - norm * r.imag()};
}

double sinc(double z)
{
    double az = std::abs(z);
    if (az < 1e-4) {
        double z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

} // namespace qshutter
