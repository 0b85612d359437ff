#include "qshutter/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace qshutter;
using cplx = std::complex<double>;

namespace {
const double norm_factor = std::sqrt(2.0 / M_PI);
const cplx e_p45{std::sqrt(0.5), std::sqrt(0.5)};
const cplx e_m45{std::sqrt(0.5), -std::sqrt(0.5)};
} // namespace

TEST_CASE("fresnel at the origin and fixed points")
{
    fresnel_pair z = fresnel(0.0);
    CHECK(z.c == 0.0);
    CHECK(z.s == 0.0);
    // reference values from a high-precision series evaluation
    fresnel_pair one = fresnel(1.0);
    CHECK(std::abs(one.c - 0.721705924292605) < 1e-13);
    CHECK(std::abs(one.s - 0.24755828765161084) < 1e-13);
}

TEST_CASE("fresnel components are odd")
{
    for (double w : {0.1, 0.7, 1.3, 2.9, 3.1, 7.0, 20.0}) {
        fresnel_pair a = fresnel(w);
        fresnel_pair b = fresnel(-w);
        CHECK(a.c == -b.c);
        CHECK(a.s == -b.s);
    }
}

TEST_CASE("fresnel matches its erfc kernel across the series/tail seam")
{
    for (double w = 0.25; w <= 8.0; w += 0.25) {
        cplx r = e_p45 * (std::sqrt(M_PI) / 2.0) * erfc_complex(e_m45 * w);
        double c_via_erfc = 0.5 - norm_factor * r.real();
        double s_via_erfc = 0.5 - norm_factor * r.imag();
        fresnel_pair f = fresnel(w);
        CHECK(std::abs(f.c - c_via_erfc) < 1e-12);
        CHECK(std::abs(f.s - s_via_erfc) < 1e-12);
    }
}

TEST_CASE("fresnel derivative matches the integrand")
{
    const double h = 1e-5;
    for (double w : {-2.3, -0.8, 0.3, 1.1, 2.7}) {
        fresnel_pair hi = fresnel(w + h);
        fresnel_pair lo = fresnel(w - h);
        double dc = (hi.c - lo.c) / (2.0 * h);
        double ds = (hi.s - lo.s) / (2.0 * h);
        CHECK(std::abs(dc - norm_factor * std::cos(w * w)) < 1e-7);
        CHECK(std::abs(ds - norm_factor * std::sin(w * w)) < 1e-7);
    }
}

TEST_CASE("fresnel stays inside its spiral bounds and approaches the limit points")
{
    double max_c = 0.0, max_s = 0.0;
    for (double w = -40.0; w <= 40.0; w += 0.01) {
        fresnel_pair f = fresnel(w);
        max_c = std::max(max_c, std::abs(f.c));
        max_s = std::max(max_s, std::abs(f.s));
    }
    CHECK(max_c < 0.9);
    CHECK(max_s < 0.9);
    // spiral radius shrinks like 1/w
    double prev = 1.0;
    for (double w : {5.0, 10.0, 20.0, 40.0}) {
        fresnel_pair f = fresnel(w);
        double r = std::hypot(f.c - 0.5, f.s - 0.5);
        CHECK(r < prev);
        CHECK(r < 1.0 / w);
        prev = r;
    }
}

TEST_CASE("erfc_complex on the real axis")
{
    for (double x : {-6.0, -2.0, -0.5, 0.0, 0.5, 2.0, 6.0, 15.0}) {
        cplx v = erfc_complex(cplx{x, 0.0});
        CHECK(v.imag() == 0.0);
        CHECK(std::abs(v.real() - std::erfc(x)) <= 1e-13 * std::max(1.0, std::erfc(x)));
    }
}

TEST_CASE("erfc_complex on the imaginary axis keeps Re = 1")
{
    // erfc(iy) = 1 - i erfi(y); the real part is exact by symmetry
    for (double y : {0.3, 1.0, 2.5, 4.0, 5.5}) {
        cplx v = erfc_complex(cplx{0.0, y});
        CHECK(v.real() == 1.0);
        CHECK(v.imag() < 0.0);
    }
    cplx unit = erfc_complex(cplx{0.0, 1.0});
    CHECK(std::abs(unit.imag() + 1.650425758797543) < 1e-12);
}

TEST_CASE("erfc_complex symmetries")
{
    const cplx pts[] = {{0.3, 0.4}, {1.2, -0.7}, {2.5, 2.5}, {-1.0, 3.0}, {3.8, 0.5}};
    for (cplx z : pts) {
        cplx direct = erfc_complex(z);
        cplx conj_sym = erfc_complex(std::conj(z));
        CHECK(std::conj(conj_sym) == direct);
        cplx reflected = erfc_complex(-z);
        double scale = std::max({1.0, std::abs(direct), std::abs(reflected)});
        CHECK(std::abs(direct + reflected - 2.0) <= 1e-12 * scale);
    }
}

TEST_CASE("erfc_complex limits")
{
    CHECK(erfc_complex(cplx{0.0, 0.0}) == cplx{1.0, 0.0});
    CHECK(std::abs(erfc_complex(cplx{30.0, 0.3})) < 1e-300);
    // decaying diagonal, the path the amplitude uses
    cplx far = erfc_complex(e_m45 * 50.0);
    CHECK(std::abs(far) < 2e-2);
    CHECK(std::isfinite(far.real()));
    // growing direction saturates instead of producing inf/nan
    cplx grown = erfc_complex(cplx{-1.0, 40.0});
    CHECK(std::isfinite(grown.real()));
    CHECK(std::isfinite(grown.imag()));
}

TEST_CASE("sinc")
{
    CHECK(sinc(0.0) == 1.0);
    CHECK(std::abs(sinc(1.0) - std::sin(1.0)) < 1e-15);
    CHECK(std::abs(sinc(M_PI)) < 1e-15);
    // seam between the Taylor branch and direct evaluation
    for (double z : {9.9e-5, 1.01e-4}) {
        CHECK(std::abs(sinc(z) - std::sin(z) / z) < 1e-14);
    }
    CHECK(sinc(0.5) == sinc(-0.5));
}
