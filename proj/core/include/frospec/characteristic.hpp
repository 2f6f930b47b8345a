#pragma once

#include "frospec/problem.hpp"

namespace frospec {

/// One evaluation of the characteristic function for boundary-value problem
/// L_j (y^(j)(0) = y(pi) = 0), split into its four constituents.
struct CharEval {
    int j = 0;
    Complex lambda;
    Complex phi_pi; ///< phi_j(rho, pi)
    Complex a0;     ///< linear term in p
    Complex a1;     ///< linear term in q
    Complex b;      ///< bilinear (p, q) term
    Complex total;  ///< phi_pi + a0 + a1 + b, summed in that order
};

/// phi_0(rho, z) = sin(rho z)/rho, phi_1(rho, z) = cos(rho z).
/// Entire in lambda; phi_0 -> z as rho -> 0.
Complex phi(int j, const Rho& rho, double z);

/// The term A_{j,which}: which = 0 couples p at a, which = 1 couples q at b.
/// Linear in the corresponding coefficient function.
Complex a_term(int j, int which, Complex lambda, const Problem& prob);

/// The bilinear term B_j(lambda; p, q): four antisymmetric bracket groups
/// plus the double integral, which is factored through product-to-sum into
/// products of one-dimensional moments. Antisymmetric under p <-> q.
Complex b_term(int j, Complex lambda, const FunctionRep& p, const FunctionRep& q,
               double a, double b);

/// Delta_j(lambda) assembled from its four-term representation.
CharEval delta_expanded(int j, Complex lambda, const Problem& prob);

/// Delta_j(lambda) by direct cofactor expansion of the defining 3x3
/// determinant. Shares only the base moment primitives with delta_expanded;
/// the combination path is independent, which makes the equality of the two
/// a genuine identity check.
Complex delta_determinant(int j, Complex lambda, const Problem& prob);

/// The kernel density W_j: eight shifted/reflected copies of p and q,
/// zero-extended and assembled on [0, pi]. A_j(lambda) equals
/// (1/2) int_0^pi cos(rho t)/rho^2 W_0 dt (j = 0) resp.
/// (1/2) int_0^pi sin(rho t)/rho  W_1 dt (j = 1).
/// Piecewise-polynomial coefficients only.
FunctionRep w_function(int j, const FunctionRep& p, const FunctionRep& q, double a, double b);

/// u_0 = (W_0 + W_1)/2 = p(pi-a-t) + q(pi-b-t); u_1 = (W_0 - W_1)/2
/// (the six-term reduction). Piecewise-polynomial coefficients only.
FunctionRep u_function(int k, const FunctionRep& p, const FunctionRep& q, double a, double b);

namespace detail {

struct CharEvalDual {
    Dual phi_pi, a0, a1, b, total;
};

Dual phi_dual(int j, Complex lambda, double z);
Dual a_term_dual(int j, int which, Complex lambda, const Problem& prob);
Dual b_term_dual(int j, Complex lambda, const FunctionRep& p, const FunctionRep& q,
                 double a, double b);
/// Value and d/dlambda of all four parts; feeds the Newton eigenvalue solver.
CharEvalDual delta_dual(int j, Complex lambda, const Problem& prob);

} // namespace detail

} // namespace frospec
