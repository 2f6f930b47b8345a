#pragma once

#include "frospec/problem.hpp"

#include <string>
#include <vector>

namespace frospec {

struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;  ///< worst observed value of the check's metric
    double threshold = 0.0; ///< the metric must stay at or below this
};

/// Deterministic random test problems (fixed seed): degree-<=2 piecewise
/// coefficients on random grids with random admissible frozen arguments.
std::vector<Problem> random_problems(int count, unsigned seed = 20250810u);

/// Complex test grid used by the dual-path and relative-error suites:
/// 40 points with |lambda| up to 500, including points on and near the
/// positive real axis and on the rays arg = pi/4 and pi/2. Radii on the
/// high-growth rays are capped so that |Im rho| * (a + b) stays within the
/// range where the cofactor expansion of the determinant retains ten digits
/// in double precision.
std::vector<Complex> lambda_grid();

/// Milder grid (real [-5, 400] plus low-|Im rho| complex points) for checks
/// with absolute thresholds on quantities that vanish identically.
std::vector<Complex> mild_lambda_grid();

/// Named invariant suites: "funcrep", "charfn", "spectrum", "nonuniq",
/// "traces", "inverse", "serialization", or "all".
std::vector<CheckResult> run_verification(const std::string& suite);

} // namespace frospec
