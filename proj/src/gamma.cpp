#include "nmkdv/gamma.hpp"

#include <cmath>

namespace nmkdv {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Godfrey's g = 7 coefficient set.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

std::complex<double> gamma_core(std::complex<double> w) {
    // Valid for Re w >= 0.5.
    w -= 1.0;
    std::complex<double> acc(kLanczos[0], 0.0);
    for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (w + static_cast<double>(k));
    const std::complex<double> t = w + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, w + 0.5) * std::exp(-t) * acc;
}

}  // namespace

std::complex<double> complex_gamma(std::complex<double> w) {
    if (w.imag() == 0.0 && w.real() <= 0.0 && w.real() == std::floor(w.real())) {
        throw PoleError("complex_gamma: pole at nonpositive integer " + std::to_string(w.real()));
    }
    if (w.real() < 0.5) {
        // Reflection: Gamma(w) = pi / (sin(pi w) Gamma(1 - w)).
        return kPi / (std::sin(kPi * w) * gamma_core(1.0 - w));
    }
    return gamma_core(w);
}

double abs_gamma_squared_on_imaginary_axis(double nu) {
    // |Gamma(i nu)|^2 = pi / (nu sinh(pi nu)), nu != 0.
    return kPi / (nu * std::sinh(kPi * nu));
}

}  // namespace nmkdv
