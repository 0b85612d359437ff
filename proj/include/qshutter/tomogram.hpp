#pragma once

#include "qshutter/quad.hpp"
#include "qshutter/shutter.hpp"
#include "qshutter/wigner.hpp"

#include <complex>

namespace qshutter {

// measurement frame X = mu x + nu p; admissible for this state when
// mu (mu t + nu) > 0
struct frame {
    double mu = 1.0;
    double nu = 0.0;
};

struct tomogram_point {
    double X = 0.0;
    frame fr;
    double k = 1.0;
    double t = 1.0;
};

frame frame_from_angles(double tau, double theta);

// area-preserving (X, P) image of a phase-space point under the (tau, theta) frame
phase_point canonical_map(double tau, double theta, const phase_point& pp);

// scaled frame coordinate rho = (k(mu t + nu) - X) / sqrt(2 mu (mu t + nu))
double rho_of(const tomogram_point& tp);

// closed-form tomographic density (1/2|mu|) {[1/2 + C(rho)]^2 + [1/2 + S(rho)]^2}
double tomogram_closed(const tomogram_point& tp);

// closed-form frame amplitude; requires nu != 0 on top of admissibility
std::complex<double> chi_closed(const tomogram_point& tp);

// definitional integral int M(u) exp[i(mu u^2/(2 nu) - u X/nu)] du with the
// eps-damped amplitude; requires nu != 0 and params.eps > 0
std::complex<double> chi_oracle(const tomogram_point& tp, const shutter_params& sp,
                                const quad_config& cfg = {});

// |chi|^2 / (2 pi |nu|)
double tomogram_from_chi(std::complex<double> chi, double nu);

} // namespace qshutter
