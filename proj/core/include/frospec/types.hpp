#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace frospec {

using Complex = std::complex<double>;

/// Spectral parameter: rho with lambda = rho^2. Everything downstream is
/// even in rho, so the branch of the square root never matters.
struct Rho {
    Complex rho{};
    Complex lambda{};

    explicit Rho(Complex r) : rho(r), lambda(r * r) {}
    static Rho from_lambda(Complex lam) { return Rho(std::sqrt(lam)); }
};

/// Thrown when an operation's stated precondition is violated.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a representation variant does not support an operation
/// (e.g. reflection of a trigonometric series).
struct UnsupportedVariantError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Thrown when eigenvalue certification fails (winding count disagrees
/// with the number of located zeros, or a zero sits on the contour).
struct CertificationError : std::runtime_error {
    int expected = 0;
    int found = 0;
    CertificationError(const std::string& msg, int expected_, int found_)
        : std::runtime_error(msg), expected(expected_), found(found_) {}
};

} // namespace frospec
