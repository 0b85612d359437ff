#pragma once

#include "qshutter/quad.hpp"
#include "qshutter/shutter.hpp"

namespace qshutter {

struct phase_point {
    double x = 0.0;
    double p = 0.0;
};

struct physical_units {
    double hbar = 1.0;
    double mass = 1.0;
};

// closed-form quasiprobability of the released beam, natural units.
// Normalized so the p-integral reproduces m_density; with u = pt - x,
// W = (2u/pi) sinc(2u(k-p)) behind the front and 0 for u <= 0.
double wigner_closed(const phase_point& pp, double k, double t);

// same distribution with hbar and mass restored
double wigner_cgs(const phase_point& pp, double k, double t, const physical_units& units);

// definitional integral (1/pi) int M*(x+y) M(x-y) e^{2ipy} dy, regularized
// by params.eps > 0; result is real up to quadrature noise
double wigner_oracle(const phase_point& pp, const shutter_params& sp, double t,
                     const quad_config& cfg = {});

// int W dp over the admissible half-line p > x/t
double wigner_marginal(double x, double k, double t, const quad_config& cfg = {});

// fraction of the p-integral captured by |p-k| < delta relative to a
// fixed box |p-k| < 10*delta; tends to 1 as hbar -> 0
double classical_concentration(double k, double t, double x, const physical_units& units,
                               double delta);

} // namespace qshutter
