#include "qshutter/errors.hpp"
#include "qshutter/shutter.hpp"
#include "qshutter/tomogram.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace qshutter;
using cplx = std::complex<double>;

namespace {
frame random_admissible(std::mt19937& gen, double t)
{
    std::uniform_real_distribution<double> umu(0.2, 3.0), unu(0.0, 1.0);
    double mu = umu(gen);
    double nu = -0.9 * mu * t + unu(gen) * (3.0 + 0.9 * mu * t);
    return {mu, nu};
}
} // namespace

TEST_CASE("frames from angles")
{
    frame id = frame_from_angles(0.0, 0.0);
    CHECK(id.mu == 1.0);
    CHECK(id.nu == 0.0);
    frame mom = frame_from_angles(0.0, M_PI / 2.0);
    CHECK(std::abs(mom.mu) < 1e-15);
    CHECK(std::abs(mom.nu - 1.0) < 1e-15);
    frame scaled = frame_from_angles(std::log(2.0), 0.0);
    CHECK(std::abs(scaled.mu - 2.0) < 1e-14);
    CHECK(std::abs(scaled.nu) < 1e-15);
}

TEST_CASE("canonical map is area preserving")
{
    phase_point same = canonical_map(0.0, 0.0, {0.7, -1.2});
    CHECK(same.x == 0.7);
    CHECK(same.p == -1.2);
    phase_point rot = canonical_map(0.0, M_PI / 2.0, {0.7, -1.2});
    CHECK(std::abs(rot.x + 1.2) < 1e-15);
    CHECK(std::abs(rot.p + 0.7) < 1e-15);

    std::mt19937 gen(21);
    std::uniform_real_distribution<double> utau(-1.5, 1.5), uth(0.0, 2.0 * M_PI);
    for (int i = 0; i < 100; ++i) {
        double tau = utau(gen), theta = uth(gen);
        phase_point e1 = canonical_map(tau, theta, {1.0, 0.0});
        phase_point e2 = canonical_map(tau, theta, {0.0, 1.0});
        CHECK(std::abs(e1.x * e2.p - e2.x * e1.p - 1.0) < 1e-13);
    }
}

TEST_CASE("frame coordinate rho")
{
    // position frame: rho is the reflected similarity variable
    for (double X : {-3.0, 0.0, 2.0, 6.0}) {
        double rho = rho_of({X, {1.0, 0.0}, 1.0, 2.0});
        CHECK(std::abs(rho + w_of({X, 2.0}, 1.0)) < 1e-14);
    }
    CHECK(std::abs(rho_of({0.0, {1.0, 1.0}, 1.0, 1.0}) - 1.0) < 1e-15);
    CHECK(std::abs(rho_of({1.0 * (2.0 * 1.5 + 0.4), {2.0, 0.4}, 1.0, 1.5})) < 1e-14);

    CHECK_THROWS_AS((void)rho_of({0.0, {0.0, 1.0}, 1.0, 1.0}), const domain_error&);
    CHECK_THROWS_AS((void)rho_of({0.0, {1.0, -2.0}, 1.0, 1.0}), const domain_error&);
    CHECK_THROWS_AS((void)rho_of({0.0, {1.0, 0.0}, 1.0, -1.0}), const domain_error&);
}

TEST_CASE("closed tomogram values and reductions")
{
    // rho = 0 rows
    CHECK(std::abs(tomogram_closed({1.0 * (1.0 + 0.0), {1.0, 0.0}, 1.0, 1.0}) - 0.25) <
          1e-14);
    CHECK(std::abs(tomogram_closed({2.0, {2.0, 0.0}, 1.0, 1.0}) - 0.125) < 1e-14);

    // position frame reduces to the density
    const double k = 1.0, t = 2.0;
    for (int i = 0; i < 50; ++i) {
        double X = k * t + (-10.0 + 20.0 * i / 49.0) * std::sqrt(t);
        double via_tomogram = tomogram_closed({X, {1.0, 0.0}, k, t});
        CHECK(std::abs(via_tomogram - m_density(w_of({X, t}, k))) < 1e-12);
    }
}

TEST_CASE("tomogram positivity and scale covariance")
{
    std::mt19937 gen(33);
    std::uniform_real_distribution<double> uX(-10.0, 10.0), ut(0.3, 5.0), ulam(0.1, 10.0);
    for (int i = 0; i < 1000; ++i) {
        double t = ut(gen);
        frame fr = random_admissible(gen, t);
        tomogram_point tp{uX(gen), fr, 1.0, t};
        double val = tomogram_closed(tp);
        CHECK(val >= 0.0);
        double lam = ulam(gen);
        // exact in algebra; the scaled frame rounds rho by a few ulp and the
        // Fresnel phase rho^2 amplifies that, so the bound is looser than 1e-12
        tomogram_point scaled{tp.X * lam, {fr.mu * lam, fr.nu * lam}, 1.0, t};
        CHECK(std::abs(tomogram_closed(scaled) - val / lam) < 1e-10 * std::max(1.0, val));
    }
}

TEST_CASE("chi modulus carries the whole tomogram")
{
    std::mt19937 gen(44);
    std::uniform_real_distribution<double> uX(-10.0, 10.0), ut(0.3, 5.0);
    for (int i = 0; i < 50; ++i) {
        double t = ut(gen);
        frame fr = random_admissible(gen, t);
        if (fr.nu == 0.0)
            continue;
        tomogram_point tp{uX(gen), fr, 1.0, t};
        CHECK(std::abs(tomogram_from_chi(chi_closed(tp), fr.nu) - tomogram_closed(tp)) <
              1e-12);
    }

    // the phase factors are unimodular: |chi|^2 is the bracket times pi|nu/mu|
    tomogram_point at_zero{1.0 * (1.0 + 0.5), {1.0, 0.5}, 1.0, 1.0};
    CHECK(std::abs(rho_of(at_zero)) < 1e-14);
    CHECK(std::abs(std::norm(chi_closed(at_zero)) - M_PI * 0.5 * 0.5) < 1e-13);

    // negative nu is admissible as long as mu(mu t + nu) > 0
    tomogram_point neg_nu{0.5, {2.0, -0.5}, 1.0, 1.0};
    CHECK(std::isfinite(std::abs(chi_closed(neg_nu))));
    CHECK(std::abs(tomogram_from_chi(chi_closed(neg_nu), -0.5) - tomogram_closed(neg_nu)) <
          1e-12);

    CHECK_THROWS_AS((void)chi_closed({0.0, {1.0, 0.0}, 1.0, 1.0}), const domain_error&);
}

TEST_CASE("tomogram_from_chi arithmetic")
{
    CHECK(tomogram_from_chi({0.0, 0.0}, 1.0) == 0.0);
    CHECK(std::abs(tomogram_from_chi({1.0, 0.0}, 1.0 / (2.0 * M_PI)) - 1.0) < 1e-14);
    CHECK_THROWS_AS((void)tomogram_from_chi({1.0, 0.0}, 0.0), const domain_error&);
}

TEST_CASE("chi oracle agrees with the closed modulus at finite damping")
{
    // behind the shutter the integrand keeps the full plane-wave modulus, so the
    // accelerated increments level off near 1e-6; the tolerance here is 5e-2
    quad_config cfg{2e-5, 1e-9, 3000, 8};
    tomogram_point tp{1.0, {1.0, 0.5}, 1.0, 1.0};
    cplx chi = chi_oracle(tp, {1.0, 1e-2}, cfg);
    CHECK(std::abs(tomogram_from_chi(chi, 0.5) - tomogram_closed(tp)) < 5e-2);

    CHECK_THROWS_AS((void)chi_oracle(tp, {1.0, 0.0}, cfg), const domain_error&);
    CHECK_THROWS_AS((void)chi_oracle({0.0, {1.0, 0.0}, 1.0, 1.0}, {1.0, 1e-2}, cfg),
                    const domain_error&);
}
