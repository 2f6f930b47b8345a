#pragma once

#include "frospec/detail/dual.hpp"

namespace frospec::detail {

/// |rho| below which every lambda-dependent block switches to its Taylor
/// branch. All blocks share the threshold so cancellation structure stays
/// consistent across the four parts of the characteristic function.
inline constexpr double kSmallRho = 0.5;
inline constexpr double kSmallLambda = kSmallRho * kSmallRho;

/// Branch selector, exposed so tests can drive both paths in the overlap band.
enum class Branch { Auto, Series, Closed };

// Raw subinterval moments of t^k against cos / sin at complex frequency mu:
//   ck(k, mu, a, b) = int_a^b t^k cos(mu t) dt
//   sk(k, mu, a, b) = int_a^b t^k sin(mu t) dt
// Closed antiderivative recursion for |mu| >= kSmallRho, Taylor series in mu
// below. Valid for any k >= 0 reachable here (degree-3 pieces plus the
// t^(2m+1) weights of the small-rho trig branch).
Complex ck(int k, Complex mu, double a, double b, Branch branch = Branch::Auto);
Complex sk(int k, Complex mu, double a, double b, Branch branch = Branch::Auto);

/// ek(k, mu, a, b) = int_a^b t^k exp(i mu t) dt. The exponential moment is
/// the cancellation-free primitive for complex frequencies: recombinations
/// of e^{+i rho t} and e^{-i rho t} moments keep every term bounded by the
/// true growth of the target kernel, which the sin/cos product-to-sum
/// expansions do not.
Complex ek(int k, Complex mu, double a, double b, Branch branch = Branch::Auto);

/// exp(i rho x) with d/dlambda = i x e^{i rho x} / (2 rho). Requires the
/// closed-branch regime |rho| >= kSmallRho.
Dual cexp(Complex lambda, double x);

/// g / (2 i rho) with the lambda-derivative of the quotient.
Dual div_2irho(const Dual& g, Complex lambda);

// Scalar factors as functions of lambda (value + d/dlambda).

/// sin(rho x)/rho; equals x at lambda = 0.
Dual phi_s(Complex lambda, double x, Branch branch = Branch::Auto);
/// cos(rho x).
Dual phi_c(Complex lambda, double x, Branch branch = Branch::Auto);
/// (cos(rho x) - 1)/lambda; equals -x^2/2 at lambda = 0.
Dual cos_m1_over_lambda(Complex lambda, double x, Branch branch = Branch::Auto);

// Piecewise-polynomial building blocks on [alpha, beta] (subsets of [0, pi]):
//   pp_cos(k) = int t^k cos(rho t) dt
//   pp_snc(k) = int t^k sin(rho t)/rho dt
// Both are entire and even in rho; derivatives are with respect to lambda.
Dual pp_cos(Complex lambda, int k, double alpha, double beta, Branch branch = Branch::Auto);
Dual pp_snc(Complex lambda, int k, double alpha, double beta, Branch branch = Branch::Auto);

// Trigonometric-basis building blocks at real frequency omega > 0:
//   tb_cos = int_alpha^beta cos(rho t) basis(omega t) dt
//   tb_snc = int_alpha^beta [sin(rho t)/rho] basis(omega t) dt
// with basis = sin or cos. Product-to-sum against ck/sk away from rho = 0,
// Taylor in lambda otherwise.
Dual tb_cos(Complex lambda, double omega, bool basis_sin, double alpha, double beta,
            Branch branch = Branch::Auto);
Dual tb_snc(Complex lambda, double omega, bool basis_sin, double alpha, double beta,
            Branch branch = Branch::Auto);

} // namespace frospec::detail
