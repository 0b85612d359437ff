#pragma once
#include <complex>

namespace qshutter {

// Fresnel integrals normalized as sqrt(2/pi) * int_0^w of cos(y^2), sin(y^2);
// limits are +-1/2 at +-infinity, both components odd.
struct fresnel_pair {
    double c;
    double s;
};

fresnel_pair fresnel(double w);

// erfc continued to complex argument. Accuracy envelope: <=1e-12 relative on the
// real axis, the imaginary axis and the |arg z| = pi/4 diagonals (the paths the
// amplitude evaluation uses); <= ~1e-6 relative in the worst off-axis pockets
// near the series/continued-fraction seam and near the imaginary axis above
// |z| = 4, where |erfc| ~ e^{|z|^2} and absolute accuracy is what survives
// doubles anyway. Growing-direction results saturate instead of overflowing.
std::complex<double> erfc_complex(std::complex<double> z);

// sin(z)/z with the removable singularity filled in; relative error < 1e-14
double sinc(double z);

} // namespace qshutter
