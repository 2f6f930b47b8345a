#pragma once

#include "frospec/detail/trig_moments.hpp"
#include "frospec/types.hpp"

#include <array>
#include <variant>
#include <vector>

namespace frospec {

enum class TrigBasis { Sine, Cosine, HalfSine, HalfCosine };

enum class Kind { Sin, Cos };

/// Argument of the oscillatory kernel in moment_integral: rho*t, rho*(d-t)
/// or rho*(t-c), with c and d the integration limits.
enum class ShiftMode { ArgT, ArgDMinusT, ArgTMinusC };

/// A complex-valued function on [0, pi], extended by zero to the rest of the
/// real line. Two representations are supported:
///  - piecewise polynomials of degree <= 3 (coefficients in powers of
///    t - left_breakpoint), on a strictly increasing grid 0 = t0 < ... < tm = pi;
///  - finite trigonometric series over one of four bases: sin(nt) (n >= 1),
///    cos(nt) (n >= 0), sin((n-1/2)t) or cos((n-1/2)t) (n >= 1).
/// Every moment integral against sin/cos(rho * arg) has a closed form, so no
/// quadrature appears anywhere downstream.
class FunctionRep {
public:
    struct PiecewisePoly {
        std::vector<double> breakpoints;
        std::vector<std::array<Complex, 4>> coeffs; // per piece, powers of (t - left)
    };
    struct TrigSeries {
        TrigBasis basis{TrigBasis::Sine};
        std::vector<Complex> coeffs; // ordered by n starting at the basis minimum
    };

    FunctionRep() : rep_(zero_pp()) {}

    static FunctionRep piecewise(std::vector<double> breakpoints,
                                 std::vector<std::array<Complex, 4>> coeffs);
    static FunctionRep trig(TrigBasis basis, std::vector<Complex> coeffs);
    static FunctionRep zero();
    static FunctionRep constant(Complex value);
    /// Indicator of [lo, hi] (clipped to [0, pi]; empty intersection gives zero).
    static FunctionRep indicator(double lo, double hi);
    /// One cubic piece on [lo, hi] (coefficients in powers of t - lo), zero elsewhere.
    static FunctionRep cubic_on(double lo, double hi, std::array<Complex, 4> local_coeffs);

    bool is_piecewise() const { return std::holds_alternative<PiecewisePoly>(rep_); }
    bool is_trig() const { return std::holds_alternative<TrigSeries>(rep_); }
    const PiecewisePoly& pp() const { return std::get<PiecewisePoly>(rep_); }
    const TrigSeries& ts() const { return std::get<TrigSeries>(rep_); }

private:
    static PiecewisePoly zero_pp();
    explicit FunctionRep(PiecewisePoly p) : rep_(std::move(p)) {}
    explicit FunctionRep(TrigSeries t) : rep_(std::move(t)) {}
    std::variant<PiecewisePoly, TrigSeries> rep_;
};

/// Minimal index n of a basis (0 for cosine, 1 otherwise).
int basis_min_index(TrigBasis basis);
/// Frequency of the n-th basis function (n, or n - 1/2 for the half bases).
double basis_frequency(TrigBasis basis, int n);
/// Whether the basis functions are sines.
bool basis_is_sin(TrigBasis basis);

/// Pointwise value; exactly 0 for t <= 0 or t >= pi (zero extension).
Complex eval(const FunctionRep& f, double t);

/// int_c^d kind(rho * arg) f(t) dt, no 1/rho prefactor. Requires
/// 0 <= c < d <= pi. Exact closed form; Taylor branch below |rho| = 0.5.
Complex moment_integral(const FunctionRep& f, const Rho& rho, Kind kind,
                        double c, double d, ShiftMode mode);

/// int_0^pi basis_n(t) f(t) dt (bare integral, no normalisation).
/// n >= 1 (n >= 0 for the cosine basis).
Complex fourier_coeff(const FunctionRep& f, TrigBasis basis, int n);

/// t -> g(c - t), re-expressed on [0, pi] with zero extension.
/// Piecewise-polynomial input only.
FunctionRep shift_reflect(const FunctionRep& g, double c);

/// t -> g(t - delta) on [0, pi]. Piecewise-polynomial input only.
FunctionRep shift(const FunctionRep& g, double delta);

/// f restricted to [lo, hi], zero outside. Piecewise-polynomial input only.
FunctionRep restrict_to(const FunctionRep& f, double lo, double hi);

/// alpha*f + beta*g. Requires both piecewise (breakpoints are merged) or both
/// trigonometric with the same basis.
FunctionRep linear_combine(Complex alpha, const FunctionRep& f,
                           Complex beta, const FunctionRep& g);

/// int_0^pi f(t) dt in closed form.
Complex integral(const FunctionRep& f);

/// L2 norm over [0, pi]; exact for a single representation, sampled only in
/// l2_distance for mixed-variant comparisons.
double l2_norm(const FunctionRep& f);
double l2_distance(const FunctionRep& f, const FunctionRep& g);

namespace detail {

/// int_c^d f(t) e^{i s rho t} dt with d/dlambda (s = +1 or -1). Closed-branch
/// regime only (|rho| >= kSmallRho); the building block whose recombinations
/// avoid exponential cancellation at complex lambda.
Dual exp_moment(const FunctionRep& f, Complex lambda, int s, double c, double d);

/// int_c^d cos(rho t) f(t) dt with d/dlambda.
Dual cos_moment(const FunctionRep& f, Complex lambda, double c, double d,
                Branch branch = Branch::Auto);
/// int_c^d [sin(rho t)/rho] f(t) dt with d/dlambda.
Dual snc_moment(const FunctionRep& f, Complex lambda, double c, double d,
                Branch branch = Branch::Auto);
/// Kernel sin(rho*arg)/rho under the given shift mode.
Dual snc_moment_shifted(const FunctionRep& f, Complex lambda, double c, double d,
                        ShiftMode mode, Branch branch = Branch::Auto);
/// Kernel cos(rho*arg) under the given shift mode.
Dual cos_moment_shifted(const FunctionRep& f, Complex lambda, double c, double d,
                        ShiftMode mode, Branch branch = Branch::Auto);

} // namespace detail

} // namespace frospec
