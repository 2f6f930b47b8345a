#include "frospec/traces.hpp"

#include <cmath>
#include <numbers>

namespace frospec {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<TraceRow> coefficient_rows(const Problem& prob, int j, int N) {
    std::vector<TraceRow> rows;
    rows.reserve(N);
    Complex running{};
    for (int n = 1; n <= N; ++n) {
        TraceRow row;
        row.n = n;
        if (j == 0) {
            row.a = (2.0 / kPi) * std::sin(n * prob.a) * fourier_coeff(prob.p, TrigBasis::Sine, n);
            row.b = (2.0 / kPi) * std::sin(n * prob.b) * fourier_coeff(prob.q, TrigBasis::Sine, n);
        } else {
            const double w = n - 0.5;
            row.a = (2.0 / kPi) * std::cos(w * prob.a) * fourier_coeff(prob.p, TrigBasis::HalfCosine, n);
            row.b = (2.0 / kPi) * std::cos(w * prob.b) * fourier_coeff(prob.q, TrigBasis::HalfCosine, n);
        }
        row.s = row.a + row.b;
        running += row.s;
        row.coeff_partial = running;
        rows.push_back(row);
    }
    return rows;
}

} // namespace

std::vector<TraceRow> trace_coefficients(const Problem& prob, int j, int N) {
    if (N < 1) throw PreconditionError("trace_coefficients: N >= 1");
    return coefficient_rows(prob, j, N);
}

std::vector<TraceRow> trace_compare(const Problem& prob, int j, int N, const Spectrum& spec) {
    if (int(spec.eigenvalues.size()) < N)
        throw PreconditionError("trace_compare: spectrum shorter than N");
    auto rows = coefficient_rows(prob, j, N);
    Complex running{};
    for (int i = 0; i < N; ++i) {
        if (spec.eigenvalues[i].n != i + 1)
            throw PreconditionError("trace_compare: spectrum indices must be contiguous from 1");
        running += spec.eigenvalues[i].kappa;
        rows[i].eig_partial = running;
    }
    return rows;
}

std::vector<TraceRow> trace_compare(const Problem& prob, int j, int N) {
    return trace_compare(prob, j, N, locate_eigenvalues(prob, j, N));
}

Problem mirrored_pair(const FunctionRep& p, double a) {
    const double b = kPi - a;
    FunctionRep q;
    if (p.is_piecewise()) {
        q = linear_combine(-1.0, shift_reflect(p, kPi), 0.0, FunctionRep::zero());
    } else if (p.ts().basis == TrigBasis::Sine) {
        // sin(n(pi - t)) = (-1)^(n+1) sin(nt), so -p(pi - t) has coefficients (-1)^n c_n
        auto coeffs = p.ts().coeffs;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const int n = int(i) + 1;
            coeffs[i] *= (n % 2 == 0) ? 1.0 : -1.0;
        }
        q = FunctionRep::trig(TrigBasis::Sine, std::move(coeffs));
    } else {
        throw UnsupportedVariantError("mirrored_pair: need piecewise polynomial or sine series");
    }
    return Problem(a, b, p, std::move(q)); // ctor rejects a >= pi - a
}

} // namespace frospec
