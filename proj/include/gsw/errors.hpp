#pragma once

#include <stdexcept>
#include <string>

namespace gsw {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input has the wrong shape (length mismatch, grid mismatch).
struct ShapeError : Error {
    using Error::Error;
};

// Internal consistency violated (e.g. broken Hermitian symmetry).
struct ConsistencyError : Error {
    using Error::Error;
};

// A Gevrey multiplier would overflow the representable range.
struct RadiusTooLargeError : Error {
    double xi;
    RadiusTooLargeError(const std::string& msg, double xi_) : Error(msg), xi(xi_) {}
};

// Not enough usable spectral modes for a radius fit.
struct InsufficientSpectrumError : Error {
    using Error::Error;
};

// The solution appears to blow up (non-finite coefficients or huge gradient).
struct BlowUpError : Error {
    double t;
    double max_ux;
    BlowUpError(const std::string& msg, double t_, double max_ux_)
        : Error(msg), t(t_), max_ux(max_ux_) {}
};

// Adaptive stepper hit the minimum step size.
struct StiffnessError : Error {
    using Error::Error;
};

// Machine derivation failed its own verification; indicates a bug.
struct DerivationError : Error {
    using Error::Error;
};

// Scalar argument outside the admissible domain of a formula.
struct DomainError : Error {
    using Error::Error;
};

// A run configuration violates a registered hypothesis.
struct HypothesisError : Error {
    using Error::Error;
};

// Checkpoint/config parse or version problems.
struct FormatError : Error {
    using Error::Error;
};

// Quadrature or other numeric procedure failed to converge.
struct NumericError : Error {
    using Error::Error;
};

} // namespace gsw
