#include "frospec/fixtures.hpp"

#include "frospec/traces.hpp"

#include <cmath>
#include <numbers>

namespace frospec::fixtures {

namespace {
constexpr double kPi = std::numbers::pi;
}

ConfusableDemo confusable_demo() {
    const double a = kPi / 4.0, b = kPi / 2.0;
    BumpSpec bump{FunctionRep::indicator(0.0, kPi / 4.0), kPi / 4.0};
    auto [s, r] = build_sr(bump, a, b);
    auto [p1, p2] = confusable_pairs(s, r);
    return ConfusableDemo{a,
                          b,
                          std::move(bump),
                          std::move(s),
                          std::move(r),
                          Problem(a, b, p1.p, p1.q),
                          Problem(a, b, p2.p, p2.q)};
}

Complex confusable_demo_delta(int j, Complex lambda) {
    using detail::cos_m1_over_lambda;
    using detail::phi_c;
    using detail::phi_s;
    const double q4 = kPi / 4.0, q2 = kPi / 2.0, q34 = 3.0 * kPi / 4.0;
    const Complex psi4 = cos_m1_over_lambda(lambda, q4).v;
    const Complex psi2 = cos_m1_over_lambda(lambda, q2).v;
    if (j == 0) {
        // mid-order term: [-3 sin(rho pi) + 5 sin(3 rho pi/4) - 2 sin(rho pi/2)
        //                  + sin(rho pi/4)] / (2 rho^3); the bracket vanishes
        // to second order at rho = 0, handled by an explicit lambda series.
        Complex mid;
        if (std::abs(lambda) < detail::kSmallLambda) {
            Complex sum{};
            Complex lam_pow{1.0, 0.0};
            double fact = 6.0; // (2m+1)! at m = 1
            double sign = -1.0;
            for (int m = 1; m <= 16; ++m) {
                const int e = 2 * m + 1;
                const double K = -3.0 * std::pow(kPi, e) + 5.0 * std::pow(q34, e) -
                                 2.0 * std::pow(q2, e) + std::pow(q4, e);
                sum += sign * K / fact * lam_pow;
                lam_pow *= lambda;
                sign = -sign;
                fact *= (2.0 * m + 2) * (2.0 * m + 3);
            }
            mid = 0.5 * sum;
        } else {
            mid = (-3.0 * phi_s(lambda, kPi).v + 5.0 * phi_s(lambda, q34).v -
                   2.0 * phi_s(lambda, q2).v + phi_s(lambda, q4).v) /
                  (2.0 * lambda);
        }
        const Complex tail = phi_s(lambda, q2).v * psi4 * psi4 +
                             2.0 * phi_s(lambda, q4).v * psi4 * (psi2 - psi4);
        return phi_s(lambda, kPi).v + mid + tail;
    }
    const Complex psi34 = cos_m1_over_lambda(lambda, q34).v;
    const Complex psiPi = cos_m1_over_lambda(lambda, kPi).v;
    const Complex mid = 0.5 * (-3.0 * psiPi + 3.0 * psi34 + psi4);
    const Complex tail = -phi_s(lambda, q2).v * phi_s(lambda, q4).v * psi4 +
                         phi_s(lambda, q4).v * phi_s(lambda, q4).v * (psi4 - psi2) -
                         phi_c(lambda, q4).v * (psi4 - psi2) * psi4;
    return phi_c(lambda, kPi).v + mid + tail;
}

Problem smooth_trace_problem() {
    return Problem(1.0, 2.0, FunctionRep::trig(TrigBasis::Sine, {Complex{1.0, 0.0}}),
                   FunctionRep::trig(TrigBasis::Cosine, {Complex{}, Complex{1.0, 0.0}}));
}

Problem sign_series_mirrored(int terms) {
    std::vector<Complex> coeffs(terms);
    for (int n = 1; n <= terms; ++n) {
        const double s = std::sin(n * kPi / 3.0);
        const double sgn = (s > 1e-9) ? 1.0 : (s < -1e-9 ? -1.0 : 0.0);
        coeffs[n - 1] = sgn / double(n);
    }
    return mirrored_pair(FunctionRep::trig(TrigBasis::Sine, std::move(coeffs)), kPi / 3.0);
}

FunctionRep cubic_bump(double lo, double hi, Complex amplitude) {
    const double mid = 0.5 * (lo + hi);
    const double w = mid - lo;
    // h(s) = 3 s^2 - 2 s^3 rising on [lo, mid], mirrored on [mid, hi]
    const FunctionRep rise = FunctionRep::cubic_on(
        lo, mid, {Complex{}, Complex{}, amplitude * (3.0 / (w * w)), amplitude * (-2.0 / (w * w * w))});
    const FunctionRep fall = FunctionRep::cubic_on(
        mid, hi, {amplitude, Complex{}, amplitude * (-3.0 / (w * w)), amplitude * (2.0 / (w * w * w))});
    return linear_combine(1.0, rise, 1.0, fall);
}

Problem right_supported_box() {
    const double a = 1.0, b = 1.8;
    return Problem(a, b, FunctionRep::indicator(b, b + 0.3),
                   linear_combine(0.5, FunctionRep::indicator(b + 0.2, kPi), 0.0, FunctionRep::zero()));
}

Problem right_supported_smooth() {
    const double a = 1.0, b = 1.8;
    return Problem(a, b, cubic_bump(1.85, 3.05, Complex{1.0, 0.0}),
                   cubic_bump(2.0, 3.1, Complex{0.5, 0.0}));
}

Problem right_supported_smooth_wide() {
    const double a = 0.9, b = 2.6;
    return Problem(a, b, cubic_bump(2.62, 3.08, Complex{1.0, 0.0}),
                   cubic_bump(2.66, 3.12, Complex{-0.75, 0.0}));
}

} // namespace frospec::fixtures
