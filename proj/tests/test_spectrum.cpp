#include "frospec/fixtures.hpp"
#include "frospec/spectrum.hpp"
#include "frospec/verification.hpp"
#include "support/galerkin.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace frospec;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("spectrum");

TEST_CASE("unperturbed spectra are exact") {
    const Problem zero(1.0, 2.0, FunctionRep::zero(), FunctionRep::zero());
    for (int j = 0; j < 2; ++j) {
        const Spectrum s = locate_eigenvalues(zero, j, 20);
        REQUIRE(s.eigenvalues.size() == 20);
        CHECK(s.certified_through == 20);
        for (const auto& e : s.eigenvalues) {
            const double base = e.n - 0.5 * j;
            CHECK(std::abs(e.lambda - base * base) < 1e-12);
            CHECK(std::abs(e.kappa) < 1e-12);
        }
    }
}

TEST_CASE("winding counts on the unperturbed and perturbed problems") {
    const Problem zero(1.0, 2.0, FunctionRep::zero(), FunctionRep::zero());
    CHECK(winding_count(zero, 0, 7) == 7);
    CHECK(winding_count(zero, 1, 7) == 7);

    // small perturbation keeps all ten zeros inside the contour
    const Problem small(0.9, 2.2,
                        fixtures::cubic_bump(0.5, 1.5, Complex{0.1, 0.0}),
                        fixtures::cubic_bump(1.7, 2.9, Complex{-0.1, 0.02}));
    CHECK(winding_count(small, 0, 10) == 10);
    CHECK(winding_count(small, 1, 10) == 10);
    const Spectrum s = locate_eigenvalues(small, 0, 10);
    CHECK(int(s.eigenvalues.size()) == 10);
}

TEST_CASE("winding rejects out-of-range N") {
    const Problem zero(1.0, 2.0, FunctionRep::zero(), FunctionRep::zero());
    CHECK_THROWS_AS(winding_count(zero, 0, 0), PreconditionError);
    CHECK_THROWS_AS(winding_count(zero, 0, 4000), PreconditionError);
}

TEST_CASE("demo problem matches the Galerkin oracle") {
    const auto demo = fixtures::confusable_demo();
    for (int j = 0; j < 2; ++j) {
        const Spectrum s = locate_eigenvalues(demo.pair1, j, 10);
        const auto oracle = testing::galerkin_eigenvalues(demo.pair1, j, 400, 10);
        REQUIRE(oracle.size() == 10);
        for (int i = 0; i < 10; ++i)
            CHECK(std::abs(s.eigenvalues[i].lambda - oracle[i]) < 1e-6);
    }
}

TEST_CASE("every accepted eigenvalue satisfies the residual bound") {
    const Problem prob = fixtures::right_supported_smooth();
    for (int j = 0; j < 2; ++j) {
        const Spectrum s = locate_eigenvalues(prob, j, 30);
        for (const auto& e : s.eigenvalues) {
            const auto d = detail::delta_dual(j, e.lambda, prob);
            const double scale = std::max(1.0, std::abs(d.total.d) * std::sqrt(std::abs(e.lambda)));
            CHECK(std::abs(d.total.v) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("near-real sanity band for small real perturbations") {
    const Problem small(1.1, 2.0,
                        fixtures::cubic_bump(0.4, 1.4, Complex{0.15, 0.0}),
                        fixtures::cubic_bump(1.5, 2.8, Complex{0.2, 0.0}));
    // ||p||_L1 + ||q||_L1 ~ 0.175 < 0.5
    LocateOptions opts;
    opts.certify = false;
    for (int j = 0; j < 2; ++j) {
        const Spectrum s = locate_eigenvalues(small, j, 50, opts);
        for (const auto& e : s.eigenvalues) CHECK(std::abs(e.lambda.imag()) <= 0.5);
    }
}

TEST_CASE("asymptotic report: zero problem, monotone running norms") {
    const Problem zero(1.0, 2.0, FunctionRep::zero(), FunctionRep::zero());
    const auto rows0 = asymptotic_report(locate_eigenvalues(zero, 0, 10));
    for (const auto& r : rows0) CHECK(std::abs(r.kappa) < 1e-12);

    const auto demo = fixtures::confusable_demo();
    LocateOptions opts;
    opts.certify = false;
    const auto rows = asymptotic_report(locate_eigenvalues(demo.pair1, 0, 60, opts));
    REQUIRE(rows.size() == 60);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].running_l2 >= rows[i - 1].running_l2);
}

TEST_CASE("tail flatness at N = 200 depends on the remainder decay rate") {
    LocateOptions opts;
    opts.certify = false;
    // Indicator-built coefficients leave Theta(1/n) remainders: the running
    // norm still gains ~1e-3 over [150, 200] (measured 9.0e-4); compactly
    // supported C^1 coefficients flatten to ~1e-10 at the same range.
    const auto demo_rows =
        asymptotic_report(locate_eigenvalues(fixtures::confusable_demo().pair1, 0, 200, opts));
    const double demo_gain = demo_rows[199].running_l2 - demo_rows[149].running_l2;
    CHECK(demo_gain > 1e-5);
    CHECK(demo_gain < 2e-3);

    const auto smooth_rows = asymptotic_report(
        locate_eigenvalues(fixtures::right_supported_smooth(), 0, 200, opts));
    CHECK(smooth_rows[199].running_l2 - smooth_rows[149].running_l2 < 1e-6);
}

TEST_CASE("first-order scaling of the leading remainder") {
    // kappa_1 roughly doubles when both coefficients double, at small norm
    const FunctionRep p = fixtures::cubic_bump(0.5, 1.5, Complex{0.02, 0.0});
    const FunctionRep q = fixtures::cubic_bump(1.8, 2.9, Complex{0.03, 0.0});
    const Problem one(1.0, 2.0, p, q);
    const Problem two(1.0, 2.0, linear_combine(2.0, p, 0.0, p), linear_combine(2.0, q, 0.0, q));
    LocateOptions opts;
    opts.certify = false;
    const Complex k1 = locate_eigenvalues(one, 0, 1, opts).eigenvalues[0].kappa;
    const Complex k2 = locate_eigenvalues(two, 0, 1, opts).eigenvalues[0].kappa;
    const double ratio = std::abs(k2) / std::abs(k1);
    CHECK(ratio > 1.5);
    CHECK(ratio < 2.5);
}

TEST_CASE("near-real complex coefficients locate and certify cleanly") {
    const Problem prob(1.1, 2.3,
                       FunctionRep::cubic_on(0.5, 2.0, {Complex{0.3, 0.05}, Complex{0.1, -0.02}}),
                       FunctionRep::trig(TrigBasis::Sine, {Complex{0.2, 0.04}}));
    const Spectrum s = locate_eigenvalues(prob, 0, 10);
    CHECK(s.certified_through == 10);
    REQUIRE(s.eigenvalues.size() == 10);
    for (const auto& e : s.eigenvalues) CHECK(std::abs(e.lambda.imag()) < 0.5);
}

TEST_CASE("strong coupling: complex pair recovered through certification") {
    // Two real eigenvalues of the odd-mode family merge into a complex
    // conjugate pair; the index-wise Newton passes find one member, and the
    // certification mismatch triggers the recovery sweep for the other.
    const Problem prob(1.0, 2.0, FunctionRep::constant(25.0), FunctionRep::constant(-17.5));
    const Spectrum s = locate_eigenvalues(prob, 0, 8);
    CHECK(s.certified_through == 8);
    CHECK(s.failures.empty());
    REQUIRE(s.eigenvalues.size() == 8);
    int complex_count = 0;
    for (const auto& e : s.eigenvalues) {
        if (std::abs(e.lambda.imag()) > 1.0) ++complex_count;
        const auto d = detail::delta_dual(0, e.lambda, prob);
        const double scale = std::max(1.0, std::abs(d.total.d) * std::sqrt(std::abs(e.lambda)));
        CHECK(std::abs(d.total.v) <= 1e-9 * scale);
    }
    CHECK(complex_count == 2); // the conjugate pair is present in full
}

TEST_CASE("locate count inside the contour equals the winding count") {
    for (const Problem& prob : {fixtures::confusable_demo().pair1,
                                fixtures::right_supported_smooth(),
                                fixtures::smooth_trace_problem()}) {
        for (int j = 0; j < 2; ++j)
            for (const int n : {10, 25}) {
                const Spectrum s = locate_eigenvalues(prob, j, n); // throws on mismatch
                CHECK(s.certified_through == n);
            }
    }
}

TEST_SUITE_END();
