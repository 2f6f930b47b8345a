#include "frospec/isospectral.hpp"

#include "frospec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace frospec {

namespace {
constexpr double kPi = std::numbers::pi;
}

double admissible_T(double a, double b) {
    if (!(0.0 < a && a < b && b < kPi)) throw PreconditionError("admissible_T: need 0 < a < b < pi");
    return std::min({a, b - a, kPi - b});
}

std::pair<FunctionRep, FunctionRep> build_sr(const BumpSpec& bump, double a, double b) {
    const double tmax = admissible_T(a, b);
    if (!(bump.T > 0.0) || bump.T > tmax + 1e-12)
        throw PreconditionError("build_sr: bump half-width exceeds min{a, b-a, pi-b}");
    if (!bump.g_half.is_piecewise())
        throw UnsupportedVariantError("build_sr: bump profile must be piecewise polynomial");
    if (l2_norm(restrict_to(bump.g_half, 0.0, bump.T)) == 0.0)
        throw PreconditionError("build_sr: bump profile is trivial");
    const FunctionRep g = restrict_to(bump.g_half, 0.0, bump.T);
    // Even extension: G(x - t) = g(|x - t|) splits into a reflected copy on
    // [x-T, x] and a shifted copy on [x, x+T].
    const auto place = [&](double x) {
        return linear_combine(1.0, shift_reflect(g, x), 1.0, shift(g, x));
    };
    FunctionRep s = place(b);
    FunctionRep r = linear_combine(-1.0, place(a), 0.0, FunctionRep::zero());
    return {std::move(s), std::move(r)};
}

std::pair<CoefficientPair, CoefficientPair> confusable_pairs(const FunctionRep& s,
                                                             const FunctionRep& r) {
    CoefficientPair pair1{linear_combine(-1.0, r, 0.0, FunctionRep::zero()),
                          linear_combine(1.0, s, 1.0, r)};
    CoefficientPair pair2{linear_combine(-1.0, s, -1.0, r),
                          linear_combine(1.0, s, 0.0, FunctionRep::zero())};
    return {std::move(pair1), std::move(pair2)};
}

CoincidenceReport verify_coincidence(const CoefficientPair& pair1, const CoefficientPair& pair2,
                                     double a, double b, const std::vector<Complex>& grid) {
    const Problem prob1(a, b, pair1.p, pair1.q);
    const Problem prob2(a, b, pair2.p, pair2.q);
    CoincidenceReport report;
    for (int j = 0; j < 2; ++j) {
        for (const Complex lam : grid) {
            const Complex d1 = delta_expanded(j, lam, prob1).total;
            const Complex d2 = delta_expanded(j, lam, prob2).total;
            const double scale = 1.0 + std::max(std::abs(d1), std::abs(d2));
            report.max_delta_discrepancy =
                std::max(report.max_delta_discrepancy, std::abs(d1 - d2) / scale);
        }
        LocateOptions opts;
        opts.certify = false;
        const Spectrum s1 = locate_eigenvalues(prob1, j, 20, opts);
        const Spectrum s2 = locate_eigenvalues(prob2, j, 20, opts);
        const std::size_t n = std::min(s1.eigenvalues.size(), s2.eigenvalues.size());
        for (std::size_t i = 0; i < n; ++i) {
            report.max_eigenvalue_diff = std::max(
                report.max_eigenvalue_diff,
                std::abs(s1.eigenvalues[i].lambda - s2.eigenvalues[i].lambda));
            ++report.eigenvalues_compared;
        }
    }
    return report;
}

} // namespace frospec
