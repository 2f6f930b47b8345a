#pragma once

#include "frospec/spectrum.hpp"

namespace frospec {

/// One row of the regularized-trace comparison. s_n = a_n + b_n holds
/// exactly (it is formed as that sum). eig_partial and coeff_partial carry
/// the partial sums up to the row's index.
struct TraceRow {
    int n = 0;
    Complex a;             ///< Fourier datum of p at the point a
    Complex b;             ///< Fourier datum of q at the point b
    Complex s;             ///< a + b
    Complex eig_partial;   ///< sum_{m<=n} (lambda_m - (m - j/2)^2)
    Complex coeff_partial; ///< sum_{m<=n} s_m
};

/// Coefficient side only: a_n, b_n, s_n and the running coefficient sum.
/// The eigenvalue column is left zero.
std::vector<TraceRow> trace_coefficients(const Problem& prob, int j, int N);

/// Both partial-sum columns; the spectrum is located internally.
std::vector<TraceRow> trace_compare(const Problem& prob, int j, int N);

/// As above with a precomputed spectrum (certified through at least N).
std::vector<TraceRow> trace_compare(const Problem& prob, int j, int N, const Spectrum& spec);

/// The mirrored construction b = pi - a, q(t) = -p(pi - t), which forces
/// b_n0 = -a_n0 and hence s_n0 = 0 for every n. Requires a < pi/2 and p
/// either piecewise polynomial or a sine series.
Problem mirrored_pair(const FunctionRep& p, double a);

} // namespace frospec
