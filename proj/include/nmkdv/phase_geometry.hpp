// phase_geometry.hpp — the uniformized spectral plane and the phase function.
//
// The spectral parameter k and the eigenvalue lambda (lambda^2 - k^2 = 1)
// are resolved through the uniformization variable z:
//
//     k = (z - 1/z)/2,   lambda = (z + 1/z)/2,
//
// so the two-sheeted k-plane becomes the punctured z-plane.  The plane
// splits into
//
//     D+ = {(|z|-1) Im z > 0},   D- = {(|z|-1) Im z < 0},
//     Sigma = R  u  {|z| = 1}          (their common boundary),
//
// and the phase driving every exponential factor in the theory is
//
//     theta(z; x, t) = lambda(z) * [x + (4 k(z)^2 - 2) t].
//
// theta is real on Sigma.  For a ray xi = x/t inside (-6, 6) the equation
// theta'(z) = 0 has four simple roots on the unit circle, one per quadrant
// (see docs/saddle_points.md for the closed form sin^2 phi = (xi+6)/12
// they satisfy); those roots organize the long-time analysis.

#pragma once

#include <complex>
#include <vector>

#include "nmkdv/errors.hpp"

namespace nmkdv::phase {

using Complex = std::complex<double>;

enum class Region { DPlus, DMinus, Contour };

struct UniformizedPoint {
    Complex z;
    Complex k;       // (z - 1/z)/2
    Complex lambda;  // (z + 1/z)/2
    Region region;
};

struct PhaseValue {
    Complex theta;
    Complex dtheta;    // d theta / dz, closed form
    Complex ddtheta;   // d^2 theta / dz^2, closed form
    double re2itheta;  // Re(2 i theta), the exponential growth rate
};

// Stationary points of theta(.; xi, t=1), ordered by quadrant 1..4.
// theta_at / ddtheta_at are per-unit-time values: the phase at (x, t)
// is t * theta_at when x/t = xi.  sqrt_ddtheta is the principal square
// root of ddtheta_at; for xi inside (-6, 6) the argument of ddtheta
// never meets the negative real axis, so the principal branch is
// continuous along any xi-sweep.
struct SaddleSet {
    double xi = 0.0;
    std::array<Complex, 4> zeta{};
    std::array<Complex, 4> theta_at{};
    std::array<Complex, 4> ddtheta_at{};
    std::array<Complex, 4> sqrt_ddtheta{};
    // Set near xi = +-6 where |theta''| collapses; downstream asymptotics
    // refuses flagged sets instead of dividing by a vanishing theta''.
    bool nearly_degenerate = false;
};

struct GridSpec {
    double re0, re1;
    int n_re;
    double im0, im1;
    int n_im;
};

struct SignatureSample {
    double re, im;
    int sign;  // sign of Re(2 i theta); 0 within 1e-10 (all of Sigma)
};

inline constexpr double kContourTol = 1e-12;
inline constexpr double kSignatureTol = 1e-10;
inline constexpr double kDefaultEpsLambda = 1e-8;

UniformizedPoint uniformize(Complex z);

PhaseValue phase_value(Complex z, double x, double t);

// Stationary points for a ray xi in the open interval (-6, 6).
// Throws RegionError outside, ConvergenceError if Newton stalls.
SaddleSet stationary_points(double xi);

// Sign grid of Re(2 i theta(.; xi, t=1)).  Rows of the rectangle grid are
// emitted in row-major order, followed by samples taken on Sigma itself
// (unit circle and the real-axis slice of the rectangle) so the table
// records the vanishing of Re(2 i theta) on the contour explicitly.
// Throws DomainError if the rectangle grid contains z = 0.
std::vector<SignatureSample> signature_table(double xi, const GridSpec& grid, int threads = 1);

// Indices of the poles whose exponential factor is neutral on the ray xi:
// |Re(2 i theta(eta_k; xi, t=1))| <= eps_lambda.
std::vector<std::size_t> soliton_activity(const std::vector<Complex>& eta, double xi,
                                          double eps_lambda = kDefaultEpsLambda);

}  // namespace nmkdv::phase
