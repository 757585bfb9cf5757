// gamma.hpp — complex Gamma function.
//
// Lanczos approximation (g = 7, 9 terms) on Re w >= 0.5, reflection
// formula Gamma(w)Gamma(1-w) = pi/sin(pi w) elsewhere.  Relative error
// is below 1e-13 on the strip |Im w| <= 10, which is where the parabolic
// cylinder coefficients evaluate it (argument i*nu with nu = O(1)).

#pragma once

#include <complex>

#include "nmkdv/errors.hpp"

namespace nmkdv {

// Throws PoleError at nonpositive integers.
std::complex<double> complex_gamma(std::complex<double> w);

// log|Gamma(w)| without overflow for moderately large |w|; used by tests.
double abs_gamma_squared_on_imaginary_axis(double nu);

}  // namespace nmkdv
