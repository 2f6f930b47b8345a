#include "frospec/characteristic.hpp"

#include <numbers>

namespace frospec {

namespace {
constexpr double kPi = std::numbers::pi;
}

namespace detail {

Dual phi_dual(int j, Complex lambda, double z) {
    return j == 0 ? phi_s(lambda, z) : phi_c(lambda, z);
}

namespace {

/// int_c^d phi_j(rho, t) f(t) dt
Dual phi_moment(int j, const FunctionRep& f, Complex lambda, double c, double d) {
    return j == 0 ? snc_moment(f, lambda, c, d) : cos_moment(f, lambda, c, d);
}

} // namespace

Dual a_term_dual(int j, int which, Complex lambda, const Problem& prob) {
    const double x = which == 0 ? prob.a : prob.b;
    const FunctionRep& f = which == 0 ? prob.p : prob.q;
    return phi_dual(j, lambda, x) * snc_moment_shifted(f, lambda, x, kPi, ShiftMode::ArgDMinusT) +
           phi_s(lambda, kPi - x) * phi_moment(j, f, lambda, 0.0, x);
}

Dual b_term_dual(int j, Complex lambda, const FunctionRep& p, const FunctionRep& q,
                 double a, double b) {
    const Dual p_phi = phi_moment(j, p, lambda, 0.0, a);
    const Dual q_phi = phi_moment(j, q, lambda, 0.0, a);
    const Dual q_ab_from_a = snc_moment_shifted(q, lambda, a, b, ShiftMode::ArgTMinusC);
    const Dual p_ab_from_a = snc_moment_shifted(p, lambda, a, b, ShiftMode::ArgTMinusC);
    const Dual q_bpi = snc_moment_shifted(q, lambda, b, kPi, ShiftMode::ArgDMinusT);
    const Dual p_bpi = snc_moment_shifted(p, lambda, b, kPi, ShiftMode::ArgDMinusT);
    const Dual p_ab_to_b = snc_moment_shifted(p, lambda, a, b, ShiftMode::ArgDMinusT);
    const Dual q_ab_to_b = snc_moment_shifted(q, lambda, a, b, ShiftMode::ArgDMinusT);

    // Double integral of sin(rho(xi - t))/rho against q(xi) p(t). Factored
    // through exponential moments away from rho = 0 (each product term stays
    // bounded by the kernel's true growth); snc/cos products near rho = 0.
    Dual double_int;
    if (std::abs(lambda) < kSmallLambda) {
        const Dual sq = snc_moment(q, lambda, a, b);
        const Dual cp = cos_moment(p, lambda, a, b);
        const Dual cq = cos_moment(q, lambda, a, b);
        const Dual sp = snc_moment(p, lambda, a, b);
        double_int = sq * cp - cq * sp;
    } else {
        const Dual qp = exp_moment(q, lambda, +1, a, b);
        const Dual qm = exp_moment(q, lambda, -1, a, b);
        const Dual pp = exp_moment(p, lambda, +1, a, b);
        const Dual pm = exp_moment(p, lambda, -1, a, b);
        double_int = div_2irho(qp * pm - qm * pp, lambda);
    }

    return phi_s(lambda, kPi - b) * (p_phi * q_ab_from_a - q_phi * p_ab_from_a) +
           phi_s(lambda, b - a) * (p_phi * q_bpi - q_phi * p_bpi) +
           phi_dual(j, lambda, a) * (q_bpi * p_ab_to_b - p_bpi * q_ab_to_b) +
           phi_dual(j, lambda, a) * phi_s(lambda, kPi - b) * double_int;
}

CharEvalDual delta_dual(int j, Complex lambda, const Problem& prob) {
    CharEvalDual e;
    e.phi_pi = phi_dual(j, lambda, kPi);
    e.a0 = a_term_dual(j, 0, lambda, prob);
    e.a1 = a_term_dual(j, 1, lambda, prob);
    e.b = b_term_dual(j, lambda, prob.p, prob.q, prob.a, prob.b);
    e.total = e.phi_pi + e.a0 + e.a1 + e.b;
    return e;
}

} // namespace detail

Complex phi(int j, const Rho& rho, double z) {
    return detail::phi_dual(j, rho.lambda, z).v;
}

Complex a_term(int j, int which, Complex lambda, const Problem& prob) {
    return detail::a_term_dual(j, which, lambda, prob).v;
}

Complex b_term(int j, Complex lambda, const FunctionRep& p, const FunctionRep& q,
               double a, double b) {
    if (!(0.0 < a && a < b && b < kPi))
        throw PreconditionError("b_term: need 0 < a < b < pi");
    return detail::b_term_dual(j, lambda, p, q, a, b).v;
}

CharEval delta_expanded(int j, Complex lambda, const Problem& prob) {
    const auto e = detail::delta_dual(j, lambda, prob);
    return CharEval{j, lambda, e.phi_pi.v, e.a0.v, e.a1.v, e.b.v, e.total.v};
}

Complex delta_determinant(int j, Complex lambda, const Problem& prob) {
    // Rows: evaluation points pi, a, b. Columns: phi_j and the two
    // transmutation integrals, with -1 on the integral block diagonal.
    const auto col = [&](const FunctionRep& f, double x) {
        return detail::snc_moment_shifted(f, lambda, 0.0, x, ShiftMode::ArgDMinusT).v;
    };
    const Complex e11 = phi(j, Rho::from_lambda(lambda), kPi);
    const Complex e21 = phi(j, Rho::from_lambda(lambda), prob.a);
    const Complex e31 = phi(j, Rho::from_lambda(lambda), prob.b);
    const Complex e12 = col(prob.p, kPi), e13 = col(prob.q, kPi);
    const Complex e22 = col(prob.p, prob.a) - 1.0, e23 = col(prob.q, prob.a);
    const Complex e32 = col(prob.p, prob.b), e33 = col(prob.q, prob.b) - 1.0;
    return e11 * (e22 * e33 - e23 * e32) - e12 * (e21 * e33 - e23 * e31) +
           e13 * (e21 * e32 - e22 * e31);
}

FunctionRep w_function(int j, const FunctionRep& p, const FunctionRep& q, double a, double b) {
    if (!p.is_piecewise() || !q.is_piecewise())
        throw UnsupportedVariantError("w_function: piecewise-polynomial coefficients required");
    const double sj = (j == 0) ? -1.0 : 1.0; // (-1)^(j+1)
    // p(t+a-pi), p(pi-t+a), p(pi-a+t), p(pi-a-t) and the q analogues
    FunctionRep w = linear_combine(sj, shift(p, kPi - a), sj, shift_reflect(p, kPi + a));
    w = linear_combine(1.0, w, -sj, shift(p, a - kPi));
    w = linear_combine(1.0, w, 1.0, shift_reflect(p, kPi - a));
    w = linear_combine(1.0, w, sj, shift(q, kPi - b));
    w = linear_combine(1.0, w, sj, shift_reflect(q, kPi + b));
    w = linear_combine(1.0, w, -sj, shift(q, b - kPi));
    w = linear_combine(1.0, w, 1.0, shift_reflect(q, kPi - b));
    return w;
}

FunctionRep u_function(int k, const FunctionRep& p, const FunctionRep& q, double a, double b) {
    if (!p.is_piecewise() || !q.is_piecewise())
        throw UnsupportedVariantError("u_function: piecewise-polynomial coefficients required");
    if (k == 0) {
        // u0 = p(pi-a-t) + q(pi-b-t)
        return linear_combine(1.0, shift_reflect(p, kPi - a), 1.0, shift_reflect(q, kPi - b));
    }
    // u1 = -p(t+a-pi) - p(pi-t+a) + p(pi-a+t) - q(t+b-pi) - q(pi-t+b) + q(pi-b+t)
    FunctionRep u = linear_combine(-1.0, shift(p, kPi - a), -1.0, shift_reflect(p, kPi + a));
    u = linear_combine(1.0, u, 1.0, shift(p, a - kPi));
    u = linear_combine(1.0, u, -1.0, shift(q, kPi - b));
    u = linear_combine(1.0, u, -1.0, shift_reflect(q, kPi + b));
    u = linear_combine(1.0, u, 1.0, shift(q, b - kPi));
    return u;
}

} // namespace frospec
