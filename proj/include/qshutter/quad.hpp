#pragma once
#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace qshutter {

struct quad_config {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_segments = 500;
    int acceleration_depth = 6;
};

struct osc_result {
    std::complex<double> value;
    double error_estimate = 0.0;
    int segments_used = 0;
    bool alternating = true; // false when segment signs stopped alternating and
                             // acceleration was switched off (plain truncation)
};

using integrand = std::function<std::complex<double>(double)>;

// Gauss-Kronrod 7-15 with bisection, worst-interval-first; deterministic.
// Throws quadrature_error (best value attached) if the budget runs out.
osc_result integrate_adaptive(const integrand& f, double a, double b, const quad_config& cfg);

// nth segment boundary of a half-line oscillatory integral; boundary(0) is the
// start of the interval, boundaries increase without bound.
using zero_locator = std::function<double(int)>;

// Boundaries where a Fresnel-type phase phi(y) = c y^2 + d y has advanced by
// pi from the previous boundary (consecutive zeros of the oscillation),
// computed from the quadratic roots, never searched. A stationary point of phi
// inside the range becomes a boundary of its own.
class quadratic_phase_zeros {
public:
    quadratic_phase_zeros(double c, double d, double start = 0.0);
    double operator()(int n) const;

private:
    void extend() const;
    double phi(double y) const { return (c_ * y + d_) * y; }
    double c_, d_, start_;
    double stationary_; // > start when present, else -inf
    mutable std::vector<double> bounds_;
};

// Sums per-segment adaptive integrals over [zeros(0), inf) and accelerates the
// partial-sum sequence by iterated averaging. Conditionally convergent
// integrands are the target; if segments stop alternating, acceleration is
// dropped and the plain truncated sum is reported with `alternating = false`.
osc_result integrate_oscillatory_halfline(const integrand& f, const zero_locator& zeros,
                                          const quad_config& cfg);

// Polynomial (Neville) extrapolation of (eps, value) samples to eps = 0.
std::complex<double> richardson_extrapolate(const std::vector<std::pair<double, std::complex<double>>>& samples);

} // namespace qshutter
