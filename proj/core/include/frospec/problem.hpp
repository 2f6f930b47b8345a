#pragma once

#include "frospec/function_rep.hpp"

#include <numbers>

namespace frospec {

/// Frozen arguments a < b and the coefficient pair (p, q) of
///   -y'' + p(x) y(a) + q(x) y(b) = lambda y  on (0, pi).
struct Problem {
    double a;
    double b;
    FunctionRep p;
    FunctionRep q;

    Problem(double a_, double b_, FunctionRep p_, FunctionRep q_)
        : a(a_), b(b_), p(std::move(p_)), q(std::move(q_)) {
        if (!(0.0 < a && a < b && b < std::numbers::pi))
            throw PreconditionError("Problem: need 0 < a < b < pi");
    }
};

} // namespace frospec
