#include "frospec/fixtures.hpp"
#include "frospec/traces.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace frospec;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("traces");

TEST_CASE("zero problem: all rows vanish") {
    const Problem zero(1.0, 2.0, FunctionRep::zero(), FunctionRep::zero());
    for (int j = 0; j < 2; ++j)
        for (const auto& row : trace_compare(zero, j, 12)) {
            CHECK(std::abs(row.s) == 0.0);
            CHECK(std::abs(row.coeff_partial) == 0.0);
            CHECK(std::abs(row.eig_partial) < 1e-11);
        }
}

TEST_CASE("constant coefficient: hand formula for a_n0") {
    const double c = 0.7, a = 1.1;
    const Problem prob(a, 2.0, FunctionRep::constant(c), FunctionRep::zero());
    for (const auto& row : trace_coefficients(prob, 0, 25)) {
        const double integral = (1.0 - std::cos(row.n * kPi)) / row.n; // int sin(nt) dt
        const double want = (2.0 * c / kPi) * std::sin(row.n * a) * integral;
        CHECK(std::abs(row.a - want) < 1e-13);
        CHECK(std::abs(row.b) == 0.0);
        CHECK(row.s == row.a + row.b);
    }
}

TEST_CASE("sign-series fixture: sqrt(3)/(2n) pattern and mirrored cancellation") {
    const Problem prob = fixtures::sign_series_mirrored();
    CHECK(prob.b == doctest::Approx(kPi - kPi / 3.0));
    const auto rows = trace_coefficients(prob, 0, 50);
    for (const auto& row : rows) {
        const double want = (row.n % 3 == 0) ? 0.0 : std::sqrt(3.0) / (2.0 * row.n);
        CHECK(std::abs(row.a - want) < 1e-13);
        CHECK(std::abs(row.b + row.a) < 1e-14); // b_n0 = -a_n0 exactly
        CHECK(std::abs(row.s) < 1e-14);
    }
    // divergence witness: partial sums of a_n0 alone exceed 1 by n = 20
    double partial = 0.0;
    for (const auto& row : rows)
        if (row.n <= 20) partial += row.a.real();
    CHECK(partial > 1.0);
}

TEST_CASE("mirrored_pair: representations and the boundary rejection") {
    // piecewise route
    const FunctionRep bump = fixtures::cubic_bump(0.6, 1.4, Complex{0.8, 0.0});
    const Problem m1 = mirrored_pair(bump, 1.0);
    CHECK(m1.b == doctest::Approx(kPi - 1.0));
    for (double t = 0.1; t < kPi; t += 0.17)
        CHECK(std::abs(eval(m1.q, t) + eval(bump, kPi - t)) < 1e-14);

    // piecewise route: the two coefficient columns come from independent
    // closed-form integrations, so the cancellation holds to rounding rather
    // than bitwise (the sine-series route above is the exact one)
    for (const auto& row : trace_coefficients(m1, 0, 30))
        CHECK(std::abs(row.b + row.a) < 1e-13);

    CHECK(l2_norm(mirrored_pair(FunctionRep::zero(), 1.0).q) == 0.0);
    CHECK_THROWS_AS(mirrored_pair(bump, kPi / 2.0), PreconditionError); // b = a
    CHECK_THROWS_AS(mirrored_pair(FunctionRep::trig(TrigBasis::Cosine, {Complex{1.0, 0.0}}), 1.0),
                    UnsupportedVariantError);
}

TEST_CASE("smooth fixture: the two partial-sum columns track each other") {
    const Problem prob = fixtures::smooth_trace_problem();
    const int N = 60;
    for (int j = 0; j < 2; ++j) {
        const auto rows = trace_compare(prob, j, N);
        REQUIRE(int(rows.size()) == N);
        for (const auto& row : rows) CHECK(row.s == row.a + row.b);
        // The eigenvalue partial sums shadow the coefficient partial sums
        // well before either column converges.
        CHECK(std::abs(rows[N - 1].eig_partial - rows[N - 1].coeff_partial) < 5e-3);
    }
}

TEST_SUITE_END();
