#pragma once

#include "frospec/types.hpp"

namespace frospec::detail {

/// First-order dual number over Complex: value and d/d(lambda).
/// All characteristic-function building blocks are entire in lambda, so
/// propagating the derivative through products gives the exact analytic
/// derivative needed by the Newton solver.
struct Dual {
    Complex v{};
    Complex d{};

    constexpr Dual() = default;
    constexpr Dual(Complex value, Complex deriv) : v(value), d(deriv) {}

    static constexpr Dual constant(Complex c) { return {c, Complex{}}; }
    /// The independent variable itself.
    static constexpr Dual variable(Complex lam) { return {lam, Complex{1.0, 0.0}}; }
};

inline Dual operator+(const Dual& x, const Dual& y) { return {x.v + y.v, x.d + y.d}; }
inline Dual operator-(const Dual& x, const Dual& y) { return {x.v - y.v, x.d - y.d}; }
inline Dual operator-(const Dual& x) { return {-x.v, -x.d}; }
inline Dual operator*(const Dual& x, const Dual& y) { return {x.v * y.v, x.d * y.v + x.v * y.d}; }
inline Dual operator*(Complex c, const Dual& x) { return {c * x.v, c * x.d}; }
inline Dual operator*(const Dual& x, Complex c) { return c * x; }
inline Dual operator*(double c, const Dual& x) { return {c * x.v, c * x.d}; }
inline Dual operator/(const Dual& x, const Dual& y) {
    const Complex q = x.v / y.v;
    return {q, (x.d - q * y.d) / y.v};
}
inline Dual operator/(const Dual& x, Complex c) { return {x.v / c, x.d / c}; }
inline Dual& operator+=(Dual& x, const Dual& y) { x = x + y; return x; }
inline Dual& operator-=(Dual& x, const Dual& y) { x = x - y; return x; }

} // namespace frospec::detail
