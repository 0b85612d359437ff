#pragma once

#include "qshutter/quad.hpp"

#include <complex>

namespace qshutter {

// monochromatic beam released at x = 0, t = 0; eps > 0 keeps the
// pre-release wave square-integrable (damped tail exp(eps * x) for x < 0)
struct shutter_params {
    double k = 1.0;
    double eps = 0.0;
};

struct spacetime_point {
    double x = 0.0;
    double t = 0.0;
};

double step(double x); // Heaviside, midpoint convention at 0

// similarity variable (x - k t) / sqrt(2 t); requires t > 0
double w_of(const spacetime_point& p, double k);

// transmitted amplitude for t > 0
std::complex<double> m_amplitude(const spacetime_point& p, const shutter_params& sp);

// |amplitude|^2 in Cornu form; defined for the sharp (eps = 0) wave only
double m_density(double w);

// free single-particle propagator over elapsed time t > 0
std::complex<double> propagator(double x, double xp, double t);

// amplitude rebuilt by integrating the propagator against the initial wave;
// the damping eps must be positive for the integral to exist
std::complex<double> m_via_propagator(const spacetime_point& p, const shutter_params& sp,
                                      const quad_config& cfg = {});

} // namespace qshutter
