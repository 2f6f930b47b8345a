#pragma once

// Galerkin oracle: truncate the operator to the first M eigenfunctions of
// the unperturbed problem. The frozen-argument terms become rank-one matrix
// updates, and a dense eigensolve yields an eigenvalue approximation that is
// independent of the characteristic-function machinery.

#include "frospec/problem.hpp"

#include <vector>

namespace frospec::testing {

/// Smallest `count` eigenvalues (sorted by real part) of the M-mode Galerkin
/// matrix D + p_hat v_a^T + q_hat v_b^T for boundary-value problem j.
std::vector<Complex> galerkin_eigenvalues(const Problem& prob, int j, int modes, int count);

} // namespace frospec::testing
