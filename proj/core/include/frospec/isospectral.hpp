#pragma once

#include "frospec/problem.hpp"

#include <utility>
#include <vector>

namespace frospec {

/// An even compactly supported profile, stored by its restriction to [0, T]
/// (piecewise polynomial); the reflection onto [-T, 0] is synthesised on
/// demand, so evenness holds by construction.
struct BumpSpec {
    FunctionRep g_half;
    double T = 0.0;
};

/// Largest admissible half-width: min{a, b-a, pi-b}.
double admissible_T(double a, double b);

/// s(t) = G(b - t), r(t) = -G(a - t) for the even extension G of the bump.
/// s is supported in [b-T, b+T], r in [a-T, a+T]; the construction keeps both
/// inside [0, pi]. The pair satisfies A_j(lambda; s, r) = 0 for j = 0, 1.
std::pair<FunctionRep, FunctionRep> build_sr(const BumpSpec& bump, double a, double b);

struct CoefficientPair {
    FunctionRep p, q;
};

/// The two coefficient pairs (-r, s+r) and (-s-r, s), which produce identical
/// characteristic functions for both boundary-value problems.
std::pair<CoefficientPair, CoefficientPair> confusable_pairs(const FunctionRep& s,
                                                             const FunctionRep& r);

struct CoincidenceReport {
    /// max over the grid and j of |Delta_j(pair1) - Delta_j(pair2)| / (1 + scale)
    double max_delta_discrepancy = 0.0;
    /// max over j and n <= 20 of |lambda_n(pair1) - lambda_n(pair2)|
    double max_eigenvalue_diff = 0.0;
    int eigenvalues_compared = 0;
};

/// Evaluates both characteristic functions of both pairs over the grid and
/// compares the first 20 eigenvalues of each family.
CoincidenceReport verify_coincidence(const CoefficientPair& pair1, const CoefficientPair& pair2,
                                     double a, double b, const std::vector<Complex>& grid);

} // namespace frospec
