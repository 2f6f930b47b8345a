#include "frospec/function_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace frospec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBreakTol = 1e-12;

const std::array<std::array<double, 4>, 4> kBinom{{{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}}};

/// Re-express a local polynomial sum c_k u^k, u = t - L, in powers of t - Lnew
/// (substitution u = v + (Lnew - L)).
std::array<Complex, 4> rebase(const std::array<Complex, 4>& c, double L, double Lnew) {
    const double u0 = Lnew - L;
    std::array<Complex, 4> out{};
    for (int k = 0; k < 4; ++k) {
        double p = 1.0;
        for (int j = k; j >= 0; --j) { // p = u0^(k-j)
            out[j] += c[k] * kBinom[k][j] * p;
            p *= u0;
        }
    }
    return out;
}

/// t -> P(c0 - t) in powers of v = t - Lnew, where P is in powers of u = t' - L
/// and t' = c0 - t, so u = (c0 - Lnew - L) - v.
std::array<Complex, 4> rebase_reflected(const std::array<Complex, 4>& c, double L, double c0,
                                        double Lnew) {
    const double u0 = c0 - Lnew - L;
    std::array<Complex, 4> out{};
    for (int k = 0; k < 4; ++k) {
        double pw = 1.0; // u0^(k-j), iterate j = k..0
        for (int j = k; j >= 0; --j) {
            out[j] += c[k] * kBinom[k][j] * pw * ((j % 2 == 0) ? 1.0 : -1.0);
            pw *= u0;
        }
    }
    return out;
}

struct Segment {
    double lo, hi;
    std::array<Complex, 4> c;
};

/// Assemble sorted non-overlapping segments into a canonical PiecewisePoly
/// covering [0, pi] (gaps filled with zero pieces).
FunctionRep assemble(std::vector<Segment> segs) {
    std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.lo < y.lo; });
    std::vector<double> breaks{0.0};
    std::vector<std::array<Complex, 4>> coeffs;
    double cur = 0.0;
    for (const auto& s : segs) {
        if (s.hi - s.lo < 1e-14) continue;
        if (s.lo > cur + 1e-14) {
            breaks.push_back(s.lo);
            coeffs.push_back({});
            cur = s.lo;
        }
        breaks.push_back(s.hi);
        coeffs.push_back(s.lo > cur ? s.c : rebase(s.c, s.lo, cur));
        cur = s.hi;
    }
    if (cur < kPi - 1e-14) {
        breaks.push_back(kPi);
        coeffs.push_back({});
    } else {
        breaks.back() = kPi;
    }
    if (coeffs.empty()) return FunctionRep::zero();
    return FunctionRep::piecewise(std::move(breaks), std::move(coeffs));
}

} // namespace

FunctionRep::PiecewisePoly FunctionRep::zero_pp() {
    return PiecewisePoly{{0.0, kPi}, {std::array<Complex, 4>{}}};
}

FunctionRep FunctionRep::piecewise(std::vector<double> breakpoints,
                                   std::vector<std::array<Complex, 4>> coeffs) {
    if (breakpoints.size() < 2 || coeffs.size() + 1 != breakpoints.size())
        throw PreconditionError("piecewise: need m+1 breakpoints for m pieces");
    if (std::abs(breakpoints.front()) > kBreakTol)
        throw PreconditionError("piecewise: first breakpoint must be 0");
    if (std::abs(breakpoints.back() - kPi) > kBreakTol)
        throw PreconditionError("piecewise: last breakpoint must be pi");
    breakpoints.front() = 0.0;
    breakpoints.back() = kPi;
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
        if (!(breakpoints[i] > breakpoints[i - 1]))
            throw PreconditionError("piecewise: breakpoints must increase strictly");
    return FunctionRep(PiecewisePoly{std::move(breakpoints), std::move(coeffs)});
}

FunctionRep FunctionRep::trig(TrigBasis basis, std::vector<Complex> coeffs) {
    return FunctionRep(TrigSeries{basis, std::move(coeffs)});
}

FunctionRep FunctionRep::zero() { return FunctionRep(zero_pp()); }

FunctionRep FunctionRep::constant(Complex value) {
    return FunctionRep(PiecewisePoly{{0.0, kPi}, {std::array<Complex, 4>{value, 0.0, 0.0, 0.0}}});
}

FunctionRep FunctionRep::indicator(double lo, double hi) {
    return cubic_on(lo, hi, {Complex{1.0, 0.0}, 0.0, 0.0, 0.0});
}

FunctionRep FunctionRep::cubic_on(double lo, double hi, std::array<Complex, 4> local_coeffs) {
    const double l = std::max(lo, 0.0), h = std::min(hi, kPi);
    if (!(l < h)) return zero();
    return assemble({Segment{l, h, l == lo ? local_coeffs : rebase(local_coeffs, lo, l)}});
}

int basis_min_index(TrigBasis basis) { return basis == TrigBasis::Cosine ? 0 : 1; }

double basis_frequency(TrigBasis basis, int n) {
    switch (basis) {
    case TrigBasis::Sine:
    case TrigBasis::Cosine: return double(n);
    default: return double(n) - 0.5;
    }
}

bool basis_is_sin(TrigBasis basis) {
    return basis == TrigBasis::Sine || basis == TrigBasis::HalfSine;
}

Complex eval(const FunctionRep& f, double t) {
    if (t <= 0.0 || t >= kPi) return {};
    if (f.is_piecewise()) {
        const auto& p = f.pp();
        const auto it = std::upper_bound(p.breakpoints.begin(), p.breakpoints.end(), t);
        const std::size_t i = std::min<std::size_t>(it - p.breakpoints.begin(), p.breakpoints.size() - 1) - 1;
        const double u = t - p.breakpoints[i];
        const auto& c = p.coeffs[i];
        return ((c[3] * u + c[2]) * u + c[1]) * u + c[0];
    }
    const auto& s = f.ts();
    const bool is_sin = basis_is_sin(s.basis);
    const int n0 = basis_min_index(s.basis);
    Complex acc{};
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        const double w = basis_frequency(s.basis, n0 + int(i));
        acc += s.coeffs[i] * (is_sin ? std::sin(w * t) : std::cos(w * t));
    }
    return acc;
}

namespace detail {

namespace {

constexpr Complex kImag{0.0, 1.0};

/// Small-rho route: Taylor branches of the cos / sinc kernels. Growth stays
/// bounded here (|Im rho| < 1/2), so the product-to-sum constants are safe.
Dual pp_base_moment_series(const FunctionRep::PiecewisePoly& p, Complex lambda, double c, double d,
                           bool snc) {
    Dual acc{};
    for (std::size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
        const double lo = std::max(p.breakpoints[i], c);
        const double hi = std::min(p.breakpoints[i + 1], d);
        if (!(lo < hi)) continue;
        const auto g = rebase(p.coeffs[i], p.breakpoints[i], 0.0); // powers of t
        for (int k = 0; k < 4; ++k) {
            if (g[k] == Complex{}) continue;
            const Dual m = snc ? pp_snc(lambda, k, lo, hi, Branch::Series)
                               : pp_cos(lambda, k, lo, hi, Branch::Series);
            acc += g[k] * m;
        }
    }
    return acc;
}

Dual ts_base_moment_series(const FunctionRep::TrigSeries& s, Complex lambda, double c, double d,
                           bool snc) {
    Dual acc{};
    const bool is_sin = basis_is_sin(s.basis);
    const int n0 = basis_min_index(s.basis);
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        if (s.coeffs[i] == Complex{}) continue;
        const double w = basis_frequency(s.basis, n0 + int(i));
        const Dual m = snc ? tb_snc(lambda, w, is_sin, c, d, Branch::Series)
                           : tb_cos(lambda, w, is_sin, c, d, Branch::Series);
        acc += s.coeffs[i] * m;
    }
    return acc;
}

Dual base_moment_series(const FunctionRep& f, Complex lambda, double c, double d, bool snc) {
    return f.is_piecewise() ? pp_base_moment_series(f.pp(), lambda, c, d, snc)
                            : ts_base_moment_series(f.ts(), lambda, c, d, snc);
}

bool series_route(Complex lambda, Branch branch) {
    if (branch == Branch::Series) return true;
    if (branch == Branch::Closed) return false;
    return std::abs(lambda) < kSmallLambda;
}

} // namespace

Dual exp_moment(const FunctionRep& f, Complex lambda, int s, double c, double d) {
    const Complex rho = std::sqrt(lambda);
    const Complex mu = double(s) * rho;
    Complex v{}, vt{}; // moment and its t-weighted companion
    if (f.is_piecewise()) {
        const auto& p = f.pp();
        for (std::size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
            const double lo = std::max(p.breakpoints[i], c);
            const double hi = std::min(p.breakpoints[i + 1], d);
            if (!(lo < hi)) continue;
            const auto g = rebase(p.coeffs[i], p.breakpoints[i], 0.0);
            for (int k = 0; k < 4; ++k) {
                if (g[k] == Complex{}) continue;
                v += g[k] * ek(k, mu, lo, hi);
                vt += g[k] * ek(k + 1, mu, lo, hi);
            }
        }
    } else {
        const auto& ts = f.ts();
        const bool is_sin = basis_is_sin(ts.basis);
        const int n0 = basis_min_index(ts.basis);
        for (std::size_t i = 0; i < ts.coeffs.size(); ++i) {
            if (ts.coeffs[i] == Complex{}) continue;
            const double w = basis_frequency(ts.basis, n0 + int(i));
            // e^{i mu t} sin(wt) = [e^{i(mu+w)t} - e^{i(mu-w)t}]/(2i); cos analogous
            const Complex e0p = ek(0, mu + w, c, d), e0m = ek(0, mu - w, c, d);
            const Complex e1p = ek(1, mu + w, c, d), e1m = ek(1, mu - w, c, d);
            if (is_sin) {
                v += ts.coeffs[i] * (e0p - e0m) / (2.0 * kImag);
                vt += ts.coeffs[i] * (e1p - e1m) / (2.0 * kImag);
            } else {
                v += ts.coeffs[i] * 0.5 * (e0p + e0m);
                vt += ts.coeffs[i] * 0.5 * (e1p + e1m);
            }
        }
    }
    // d/dlambda = (i s / (2 rho)) * t-weighted moment
    return {v, kImag * double(s) * vt / (2.0 * rho)};
}

Dual cos_moment(const FunctionRep& f, Complex lambda, double c, double d, Branch branch) {
    if (series_route(lambda, branch)) return base_moment_series(f, lambda, c, d, false);
    const Dual mp = exp_moment(f, lambda, +1, c, d);
    const Dual mm = exp_moment(f, lambda, -1, c, d);
    return 0.5 * (mp + mm);
}

Dual snc_moment(const FunctionRep& f, Complex lambda, double c, double d, Branch branch) {
    if (series_route(lambda, branch)) return base_moment_series(f, lambda, c, d, true);
    const Dual mp = exp_moment(f, lambda, +1, c, d);
    const Dual mm = exp_moment(f, lambda, -1, c, d);
    return div_2irho(mp - mm, lambda);
}

Dual snc_moment_shifted(const FunctionRep& f, Complex lambda, double c, double d, ShiftMode mode,
                        Branch branch) {
    if (mode == ShiftMode::ArgT) return snc_moment(f, lambda, c, d, branch);
    if (series_route(lambda, branch)) {
        const Dual mc = base_moment_series(f, lambda, c, d, false);
        const Dual ms = base_moment_series(f, lambda, c, d, true);
        if (mode == ShiftMode::ArgDMinusT)
            return phi_s(lambda, d, Branch::Series) * mc - phi_c(lambda, d, Branch::Series) * ms;
        return phi_c(lambda, c, Branch::Series) * ms - phi_s(lambda, c, Branch::Series) * mc;
    }
    const Dual mp = exp_moment(f, lambda, +1, c, d);
    const Dual mm = exp_moment(f, lambda, -1, c, d);
    // sin(rho(d-t))/rho = [e^{i rho d} e^{-i rho t} - e^{-i rho d} e^{i rho t}]/(2 i rho)
    if (mode == ShiftMode::ArgDMinusT)
        return div_2irho(cexp(lambda, d) * mm - cexp(lambda, -d) * mp, lambda);
    // sin(rho(t-c))/rho = [e^{-i rho c} e^{i rho t} - e^{i rho c} e^{-i rho t}]/(2 i rho)
    return div_2irho(cexp(lambda, -c) * mp - cexp(lambda, c) * mm, lambda);
}

Dual cos_moment_shifted(const FunctionRep& f, Complex lambda, double c, double d, ShiftMode mode,
                        Branch branch) {
    if (mode == ShiftMode::ArgT) return cos_moment(f, lambda, c, d, branch);
    if (series_route(lambda, branch)) {
        const Dual lam = Dual::variable(lambda);
        const Dual mc = base_moment_series(f, lambda, c, d, false);
        const Dual ms = base_moment_series(f, lambda, c, d, true);
        if (mode == ShiftMode::ArgDMinusT)
            return phi_c(lambda, d, Branch::Series) * mc +
                   lam * phi_s(lambda, d, Branch::Series) * ms;
        return phi_c(lambda, c, Branch::Series) * mc + lam * phi_s(lambda, c, Branch::Series) * ms;
    }
    const Dual mp = exp_moment(f, lambda, +1, c, d);
    const Dual mm = exp_moment(f, lambda, -1, c, d);
    if (mode == ShiftMode::ArgDMinusT)
        return 0.5 * (cexp(lambda, d) * mm + cexp(lambda, -d) * mp);
    return 0.5 * (cexp(lambda, -c) * mp + cexp(lambda, c) * mm);
}

} // namespace detail

Complex moment_integral(const FunctionRep& f, const Rho& rho, Kind kind, double c, double d,
                        ShiftMode mode) {
    if (!(c >= -kBreakTol && c < d && d <= kPi + kBreakTol))
        throw PreconditionError("moment_integral: need 0 <= c < d <= pi");
    const double lo = std::max(c, 0.0), hi = std::min(d, kPi);
    if (kind == Kind::Cos) return detail::cos_moment_shifted(f, rho.lambda, lo, hi, mode).v;
    return rho.rho * detail::snc_moment_shifted(f, rho.lambda, lo, hi, mode).v;
}

Complex fourier_coeff(const FunctionRep& f, TrigBasis basis, int n) {
    if (n < basis_min_index(basis))
        throw PreconditionError("fourier_coeff: index below basis minimum");
    const double w = basis_frequency(basis, n);
    const Complex lam{w * w, 0.0};
    if (basis_is_sin(basis)) {
        // sin(w t) = w * [sin(w t)/w]; at w = 0 the integral would vanish,
        // but sine bases start at n = 1 so w >= 1/2 here.
        return w * detail::snc_moment(f, lam, 0.0, kPi).v;
    }
    return detail::cos_moment(f, lam, 0.0, kPi).v;
}

FunctionRep shift_reflect(const FunctionRep& g, double c) {
    if (!g.is_piecewise())
        throw UnsupportedVariantError("shift_reflect: trigonometric series not supported");
    const auto& p = g.pp();
    std::vector<Segment> segs;
    for (std::size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
        const double L = p.breakpoints[i], R = p.breakpoints[i + 1];
        const double lo = std::max(0.0, c - R), hi = std::min(kPi, c - L);
        if (!(lo < hi)) continue;
        segs.push_back({lo, hi, rebase_reflected(p.coeffs[i], L, c, lo)});
    }
    return assemble(std::move(segs));
}

FunctionRep shift(const FunctionRep& g, double delta) {
    if (!g.is_piecewise())
        throw UnsupportedVariantError("shift: trigonometric series not supported");
    const auto& p = g.pp();
    std::vector<Segment> segs;
    for (std::size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
        const double L = p.breakpoints[i], R = p.breakpoints[i + 1];
        const double lo = std::max(0.0, L + delta), hi = std::min(kPi, R + delta);
        if (!(lo < hi)) continue;
        // u = t - delta - L = v + (lo - delta - L)
        segs.push_back({lo, hi, rebase(p.coeffs[i], L + delta, lo)});
    }
    return assemble(std::move(segs));
}

FunctionRep restrict_to(const FunctionRep& f, double lo, double hi) {
    if (!f.is_piecewise())
        throw UnsupportedVariantError("restrict_to: trigonometric series not supported");
    const auto& p = f.pp();
    std::vector<Segment> segs;
    for (std::size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
        const double L = std::max(p.breakpoints[i], lo), R = std::min(p.breakpoints[i + 1], hi);
        if (!(L < R)) continue;
        segs.push_back({L, R, rebase(p.coeffs[i], p.breakpoints[i], L)});
    }
    return assemble(std::move(segs));
}

FunctionRep linear_combine(Complex alpha, const FunctionRep& f, Complex beta,
                           const FunctionRep& g) {
    if (f.is_piecewise() && g.is_piecewise()) {
        const auto& pf = f.pp();
        const auto& pg = g.pp();
        std::vector<double> merged;
        merged.reserve(pf.breakpoints.size() + pg.breakpoints.size());
        std::merge(pf.breakpoints.begin(), pf.breakpoints.end(), pg.breakpoints.begin(),
                   pg.breakpoints.end(), std::back_inserter(merged));
        merged.erase(std::unique(merged.begin(), merged.end(),
                                 [](double x, double y) { return std::abs(x - y) <= 1e-13; }),
                     merged.end());
        std::vector<std::array<Complex, 4>> coeffs;
        coeffs.reserve(merged.size() - 1);
        std::size_t fi = 0, gi = 0;
        for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
            const double lo = merged[i];
            const double mid = 0.5 * (lo + merged[i + 1]);
            while (fi + 2 < pf.breakpoints.size() && pf.breakpoints[fi + 1] < mid) ++fi;
            while (gi + 2 < pg.breakpoints.size() && pg.breakpoints[gi + 1] < mid) ++gi;
            const auto cf = rebase(pf.coeffs[fi], pf.breakpoints[fi], lo);
            const auto cg = rebase(pg.coeffs[gi], pg.breakpoints[gi], lo);
            std::array<Complex, 4> c{};
            for (int k = 0; k < 4; ++k) c[k] = alpha * cf[k] + beta * cg[k];
            coeffs.push_back(c);
        }
        return FunctionRep::piecewise(std::move(merged), std::move(coeffs));
    }
    if (f.is_trig() && g.is_trig() && f.ts().basis == g.ts().basis) {
        const auto& sf = f.ts();
        const auto& sg = g.ts();
        std::vector<Complex> coeffs(std::max(sf.coeffs.size(), sg.coeffs.size()));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i < sf.coeffs.size()) coeffs[i] += alpha * sf.coeffs[i];
            if (i < sg.coeffs.size()) coeffs[i] += beta * sg.coeffs[i];
        }
        return FunctionRep::trig(sf.basis, std::move(coeffs));
    }
    throw UnsupportedVariantError("linear_combine: incompatible representations");
}

Complex integral(const FunctionRep& f) {
    return detail::cos_moment(f, Complex{0.0, 0.0}, 0.0, kPi).v;
}

double l2_norm(const FunctionRep& f) {
    if (f.is_piecewise()) {
        const auto& p = f.pp();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
            const double len = p.breakpoints[i + 1] - p.breakpoints[i];
            const auto& c = p.coeffs[i];
            // |P(u)|^2 integrated: coefficients of P * conj(P)
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    const double m = double(a + b + 1);
                    acc += std::real(c[a] * std::conj(c[b])) * std::pow(len, a + b + 1) / m;
                }
        }
        return std::sqrt(std::max(acc, 0.0));
    }
    const auto& s = f.ts();
    double acc = 0.0;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        const bool constant_term = (s.basis == TrigBasis::Cosine && i == 0);
        acc += std::norm(s.coeffs[i]) * (constant_term ? kPi : kPi / 2.0);
    }
    return std::sqrt(acc);
}

double l2_distance(const FunctionRep& f, const FunctionRep& g) {
    if ((f.is_piecewise() && g.is_piecewise()) ||
        (f.is_trig() && g.is_trig() && f.ts().basis == g.ts().basis))
        return l2_norm(linear_combine(1.0, f, -1.0, g));
    // Mixed representations: composite Simpson on a fine grid.
    const int n = 1 << 14;
    const double h = kPi / n;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        acc += w * std::norm(eval(f, i * h) - eval(g, i * h));
    }
    return std::sqrt(std::max(acc * h / 3.0, 0.0));
}

} // namespace frospec
