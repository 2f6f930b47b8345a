#pragma once

#include "frospec/characteristic.hpp"

#include <string>
#include <vector>

namespace frospec {

struct EigenRecord {
    int n = 0;          ///< asymptotic index (initial guess (n - j/2)^2)
    Complex lambda;
    Complex kappa;      ///< lambda - (n - j/2)^2
    double residual = 0.0; ///< |Delta_j(lambda)| at the accepted root
};

struct FailureRecord {
    int n = 0;
    std::string reason;
};

/// Ordered eigenvalue list of one boundary-value problem, with asymptotic
/// remainders. certified_through = N means the argument-principle count
/// inside |lambda| = (N + 1/2)^2 matched the located zeros.
struct Spectrum {
    int j = 0;
    std::vector<EigenRecord> eigenvalues;
    std::vector<FailureRecord> failures;
    int certified_through = 0;
};

struct LocateOptions {
    bool certify = true;
    int max_iterations = 100;
    double residual_tol = 1e-12;
};

/// Finds the N eigenvalues of smallest index by damped complex Newton on
/// Delta_j from initial guesses (n - j/2)^2, then certifies the count inside
/// Gamma_N by winding number. Individual Newton failures are recorded per
/// index; a winding mismatch throws CertificationError.
Spectrum locate_eigenvalues(const Problem& prob, int j, int N, const LocateOptions& opts = {});

/// Number of zeros of Delta_j inside |lambda| = (N + 1/2)^2 by the argument
/// principle: phase increments along an adaptively refined contour. A zero
/// too close to the contour triggers radius perturbations (N+1/2 +- 0.05),
/// then a hard error.
int winding_count(const Problem& prob, int j, int N);

struct AsymptoticRow {
    int n = 0;
    Complex kappa;
    double running_l2 = 0.0; ///< sqrt(sum_{m<=n} |kappa_m|^2)
};

/// Running l2 norms of the remainders; monotone non-decreasing.
std::vector<AsymptoticRow> asymptotic_report(const Spectrum& spec);

} // namespace frospec
