#include "nmkdv/phase_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace nmkdv::phase {

namespace {

constexpr double kNewtonTol = 1e-13;
constexpr int kNewtonMaxIter = 50;
// |theta''| below this (t = 1 normalization) marks a near-degenerate saddle.
constexpr double kDegenerateDdtheta = 1e-6;

}  // namespace

UniformizedPoint uniformize(Complex z) {
    if (z == Complex(0.0, 0.0)) {
        throw DomainError("uniformize: z = 0 is the uniformization pole");
    }
    UniformizedPoint p;
    p.z = z;
    const Complex zinv = 1.0 / z;
    p.k = 0.5 * (z - zinv);
    p.lambda = 0.5 * (z + zinv);
    const double off_circle = std::abs(z) - 1.0;
    if (std::abs(z.imag()) < kContourTol || std::abs(off_circle) < kContourTol) {
        p.region = Region::Contour;
    } else {
        p.region = (off_circle * z.imag() > 0.0) ? Region::DPlus : Region::DMinus;
    }
    return p;
}

PhaseValue phase_value(Complex z, double x, double t) {
    if (z == Complex(0.0, 0.0)) {
        throw DomainError("phase_value: z = 0 is the uniformization pole");
    }
    // theta = lambda * g with lambda = (z + 1/z)/2 and
    // g = x + (z^2 + z^-2 - 4) t, so 4k^2 - 2 = z^2 + z^-2 - 4.
    const Complex zi = 1.0 / z;
    const Complex zi2 = zi * zi;
    const Complex lambda = 0.5 * (z + zi);
    const Complex dlambda = 0.5 * (1.0 - zi2);
    const Complex ddlambda = zi2 * zi;
    const Complex g = x + (z * z + zi2 - 4.0) * t;
    const Complex dg = 2.0 * t * (z - zi2 * zi);
    const Complex ddg = t * (2.0 + 6.0 * zi2 * zi2);

    PhaseValue v;
    v.theta = lambda * g;
    v.dtheta = dlambda * g + lambda * dg;
    v.ddtheta = ddlambda * g + 2.0 * dlambda * dg + lambda * ddg;
    v.re2itheta = (2.0 * Complex(0.0, 1.0) * v.theta).real();
    return v;
}

SaddleSet stationary_points(double xi) {
    if (!(xi > -6.0 && xi < 6.0)) {
        throw RegionError("stationary_points: xi must lie strictly inside (-6, 6), got " +
                          std::to_string(xi));
    }
    // Seed: on |z| = 1 with z = e^{i phi}, d theta / d phi =
    // -sinphi (xi + 6 - 12 sin^2 phi), so the quadrant roots satisfy
    // sin^2 phi = (xi + 6)/12.
    const double s2 = (xi + 6.0) / 12.0;
    const double phi0 = std::asin(std::sqrt(s2));
    const std::array<double, 4> seeds = {phi0, M_PI - phi0, M_PI + phi0, -phi0};

    SaddleSet set;
    set.xi = xi;
    for (int i = 0; i < 4; ++i) {
        Complex z = std::polar(1.0, seeds[static_cast<std::size_t>(i)]);
        bool converged = false;
        for (int it = 0; it < kNewtonMaxIter; ++it) {
            const PhaseValue pv = phase_value(z, xi, 1.0);
            if (std::abs(pv.dtheta) < kNewtonTol) {
                converged = true;
                break;
            }
            if (pv.ddtheta == Complex(0.0, 0.0)) break;
            z -= pv.dtheta / pv.ddtheta;
        }
        if (!converged) {
            throw ConvergenceError("stationary_points: Newton failed at xi = " +
                                   std::to_string(xi) + ", quadrant " + std::to_string(i + 1));
        }
        const PhaseValue pv = phase_value(z, xi, 1.0);
        set.zeta[static_cast<std::size_t>(i)] = z;
        set.theta_at[static_cast<std::size_t>(i)] = pv.theta;
        set.ddtheta_at[static_cast<std::size_t>(i)] = pv.ddtheta;
        set.sqrt_ddtheta[static_cast<std::size_t>(i)] = std::sqrt(pv.ddtheta);
        if (std::abs(pv.ddtheta) < kDegenerateDdtheta) set.nearly_degenerate = true;
    }
    return set;
}

namespace {

int sign_of(double v) {
    if (std::abs(v) < kSignatureTol) return 0;
    return v > 0.0 ? 1 : -1;
}

}  // namespace

std::vector<SignatureSample> signature_table(double xi, const GridSpec& grid, int threads) {
    const double dre = grid.n_re > 1 ? (grid.re1 - grid.re0) / (grid.n_re - 1) : 0.0;
    const double dim = grid.n_im > 1 ? (grid.im1 - grid.im0) / (grid.n_im - 1) : 0.0;

    for (int j = 0; j < grid.n_im; ++j) {
        for (int i = 0; i < grid.n_re; ++i) {
            const Complex z(grid.re0 + i * dre, grid.im0 + j * dim);
            if (std::abs(z) < 1e-12) {
                throw DomainError("signature_table: grid contains z = 0");
            }
        }
    }

    std::vector<SignatureSample> out(static_cast<std::size_t>(grid.n_re) *
                                     static_cast<std::size_t>(grid.n_im));
    auto run_rows = [&](int j0, int j1) {
        for (int j = j0; j < j1; ++j) {
            for (int i = 0; i < grid.n_re; ++i) {
                const double re = grid.re0 + i * dre;
                const double im = grid.im0 + j * dim;
                const PhaseValue pv = phase_value(Complex(re, im), xi, 1.0);
                out[static_cast<std::size_t>(j) * grid.n_re + i] = {re, im,
                                                                    sign_of(pv.re2itheta)};
            }
        }
    };

    const int nthreads = std::max(1, std::min(threads, grid.n_im));
    if (nthreads == 1) {
        run_rows(0, grid.n_im);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (grid.n_im + nthreads - 1) / nthreads;
        for (int k = 0; k < nthreads; ++k) {
            const int j0 = k * chunk;
            const int j1 = std::min(grid.n_im, j0 + chunk);
            if (j0 < j1) pool.emplace_back(run_rows, j0, j1);
        }
        for (auto& th : pool) th.join();
    }

    // Explicit Sigma samples: unit circle, then the real-axis slice of the
    // rectangle (skipping the puncture at z = 0).
    const int n_circle = 256;
    for (int m = 0; m < n_circle; ++m) {
        const double phi = 2.0 * M_PI * m / n_circle;
        const Complex z = std::polar(1.0, phi);
        const PhaseValue pv = phase_value(z, xi, 1.0);
        out.push_back({z.real(), z.imag(), sign_of(pv.re2itheta)});
    }
    if (grid.im0 <= 0.0 && grid.im1 >= 0.0) {
        for (int i = 0; i < grid.n_re; ++i) {
            const double re = grid.re0 + i * dre;
            if (std::abs(re) < 1e-9) continue;
            const PhaseValue pv = phase_value(Complex(re, 0.0), xi, 1.0);
            out.push_back({re, 0.0, sign_of(pv.re2itheta)});
        }
    }
    return out;
}

std::vector<std::size_t> soliton_activity(const std::vector<Complex>& eta, double xi,
                                          double eps_lambda) {
    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < eta.size(); ++k) {
        const PhaseValue pv = phase_value(eta[k], xi, 1.0);
        if (std::abs(pv.re2itheta) <= eps_lambda) active.push_back(k);
    }
    return active;
}

}  // namespace nmkdv::phase
