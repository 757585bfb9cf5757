// errors.hpp — exception taxonomy shared by all modules.
//
// Every failure the library can report maps onto one of these types, and
// each type carries the process exit code the CLI uses when the error
// escapes to main:
//
//   2  domain / region / branch / reality violations
//   3  iteration failed to converge
//   4  spectral singularity (|s11| ~ 0 on the contour)
//   5  initial datum fails the boundary decay check

#pragma once

#include <stdexcept>
#include <string>

namespace nmkdv {

class Error : public std::runtime_error {
public:
    Error(std::string msg, int exit_code)
        : std::runtime_error(std::move(msg)), exit_code_(exit_code) {}
    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

// z = 0, z = +-i, malformed grids, and other argument-domain violations.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg, 2) {}
};

// xi outside (-6, 6), t below the asymptotic gate, degenerate saddle input.
class RegionError : public Error {
public:
    explicit RegionError(const std::string& msg) : Error(msg, 2) {}
};

class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg, 3) {}
};

// Initial datum does not reach its boundary values at the grid ends.
class DecayError : public Error {
public:
    explicit DecayError(const std::string& msg) : Error(msg, 5) {}
};

// ODE step-size control bottomed out before reaching the local tolerance.
class StepError : public Error {
public:
    explicit StepError(const std::string& msg) : Error(msg, 3) {}
};

// det psi_+ ~ 0 where the scattering matrix is formed.
class SingularError : public Error {
public:
    explicit SingularError(const std::string& msg) : Error(msg, 4) {}
};

// Zero of s11 on the contour itself.
class SpectralSingularityError : public Error {
public:
    explicit SpectralSingularityError(const std::string& msg) : Error(msg, 4) {}
};

// 1 - rho*rho_tilde <= 0 where a real logarithm is required, or a local
// log/sqrt argument pinned to the negative real axis.
class BranchError : public Error {
public:
    explicit BranchError(const std::string& msg) : Error(msg, 2) {}
};

// |1 - rho*rho_tilde| below threshold on a quadrature panel.
class NonvanishingError : public Error {
public:
    explicit NonvanishingError(const std::string& msg) : Error(msg, 2) {}
};

// Reflectionless linear system condition number above threshold.
class SingularSystemError : public Error {
public:
    SingularSystemError(const std::string& msg, int worst_pole)
        : Error(msg, 2), worst_pole_(worst_pole) {}
    int worst_pole() const noexcept { return worst_pole_; }

private:
    int worst_pole_;
};

// Recovered field has a nonvanishing imaginary part: convention mismatch.
class RealityError : public Error {
public:
    explicit RealityError(const std::string& msg) : Error(msg, 2) {}
};

// Zero of s11 with multiplicity > 1 (simple poles assumed).
class MultiplicityError : public Error {
public:
    explicit MultiplicityError(const std::string& msg) : Error(msg, 3) {}
};

// Gamma function evaluated at a nonpositive integer.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& msg) : Error(msg, 2) {}
};

class DegenerateFitError : public Error {
public:
    explicit DegenerateFitError(const std::string& msg) : Error(msg, 2) {}
};

// Split-step field norm grew tenfold: modulational blowup guard.
class BlowupError : public Error {
public:
    explicit BlowupError(const std::string& msg) : Error(msg, 3) {}
};

// Propagated failure of a user-supplied evaluator.
class EvalError : public Error {
public:
    explicit EvalError(const std::string& msg) : Error(msg, 2) {}
};

}  // namespace nmkdv
