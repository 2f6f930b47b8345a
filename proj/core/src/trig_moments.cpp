#include "frospec/detail/trig_moments.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace frospec::detail {

namespace {

constexpr double kSeriesEps = 1e-18;

double tmax_of(double a, double b) { return std::max(std::abs(a), std::abs(b)); }

struct PowerTable {
    std::vector<double> pa, pb; // pa[j] = a^j
    PowerTable(double a, double b, int jmax) {
        pa.resize(jmax + 1);
        pb.resize(jmax + 1);
        pa[0] = pb[0] = 1.0;
        for (int j = 1; j <= jmax; ++j) {
            pa[j] = pa[j - 1] * a;
            pb[j] = pb[j - 1] * b;
        }
    }
    /// (b^j - a^j)/j
    double diff(int j) const { return (pb[j] - pa[j]) / j; }
};

// Taylor in mu, for small |mu| * tmax.
Complex sk_ck_series(int k, Complex mu, double a, double b, bool want_sin) {
    const Complex mu2 = mu * mu;
    const int mmax = 48;
    PowerTable pw(a, b, k + 2 * mmax + 3);
    Complex sum = 0.0;
    Complex coef = want_sin ? mu : Complex{1.0, 0.0};
    double fact = 1.0; // (2m+1)! resp. (2m)!
    for (int m = 0; m <= mmax; ++m) {
        const int j = want_sin ? k + 2 * m + 2 : k + 2 * m + 1;
        const Complex term = coef / fact * pw.diff(j);
        sum += term;
        if (m >= 2 && std::abs(term) <= kSeriesEps * std::abs(sum)) break;
        coef *= -mu2;
        const double n1 = want_sin ? 2.0 * m + 2 : 2.0 * m + 1;
        const double n2 = want_sin ? 2.0 * m + 3 : 2.0 * m + 2;
        fact *= n1 * n2;
    }
    return sum;
}

// Downward antiderivative recursion, stable when |mu| * tmax is not small
// against k.
void antider_stacks(int k, Complex mu, double t, std::vector<Complex>& ic, std::vector<Complex>& is) {
    ic.assign(k + 1, Complex{});
    is.assign(k + 1, Complex{});
    const Complex s = std::sin(mu * t), c = std::cos(mu * t);
    ic[0] = s / mu;
    is[0] = -c / mu;
    double tk = 1.0;
    for (int j = 1; j <= k; ++j) {
        tk *= t;
        ic[j] = tk * s / mu - (double(j) / mu) * is[j - 1];
        is[j] = -tk * c / mu + (double(j) / mu) * ic[j - 1];
    }
}

Complex sk_ck_downward(int k, Complex mu, double a, double b, bool want_sin) {
    std::vector<Complex> ic_a, is_a, ic_b, is_b;
    antider_stacks(k, mu, a, ic_a, is_a);
    antider_stacks(k, mu, b, ic_b, is_b);
    return want_sin ? (is_b[k] - is_a[k]) : (ic_b[k] - ic_a[k]);
}

// Upward boundary-term chain, stable when |mu| * tmax << k. Each step peels
// a boundary term and defers a (mu/(j+1))-weighted integral of the other
// trig kind, so the deferred coefficient shrinks geometrically.
Complex sk_ck_upward(int k, Complex mu, double a, double b, bool want_sin) {
    const double tm = tmax_of(a, b);
    const double growth = std::exp(std::abs(std::imag(mu)) * tm);
    Complex sum = 0.0;
    Complex coef{1.0, 0.0};
    bool sin_kind = want_sin;
    double pa = std::pow(a, k + 1), pb = std::pow(b, k + 1);
    for (int j = k; j < k + 220; ++j) {
        const Complex boundary = sin_kind
            ? (pb * std::sin(mu * b) - pa * std::sin(mu * a)) / double(j + 1)
            : (pb * std::cos(mu * b) - pa * std::cos(mu * a)) / double(j + 1);
        sum += coef * boundary;
        const Complex next_coef = coef * mu / double(j + 1) * (sin_kind ? -1.0 : 1.0);
        const double rem = std::abs(next_coef) * growth * std::pow(tm, j + 2) / double(j + 2);
        if (rem <= kSeriesEps * std::max(std::abs(sum), 1e-300)) break;
        coef = next_coef;
        sin_kind = !sin_kind;
        pa *= a;
        pb *= b;
    }
    return sum;
}

Complex sk_ck(int k, Complex mu, double a, double b, bool want_sin, Branch branch) {
    if (a == b) return {};
    const double scale = std::abs(mu) * tmax_of(a, b);
    if (branch == Branch::Series || (branch == Branch::Auto && scale < 1.0))
        return sk_ck_series(k, mu, a, b, want_sin);
    if (branch != Branch::Series && k >= 4 && scale < 0.6 * (k + 1))
        return sk_ck_upward(k, mu, a, b, want_sin);
    return sk_ck_downward(k, mu, a, b, want_sin);
}

bool use_series(Complex lambda, Branch branch) {
    if (branch == Branch::Series) return true;
    if (branch == Branch::Closed) return false;
    return std::abs(lambda) < kSmallLambda;
}

/// Shared accumulator for power series in lambda: sum_m coeff_m lambda^m
/// together with the term-differentiated series. Safe at lambda = 0.
struct LambdaSeries {
    Complex lambda;
    Complex v{}, d{};
    Complex pow_m{1.0, 0.0};  // lambda^m
    Complex pow_prev{};       // lambda^(m-1)
    int m = 0;

    explicit LambdaSeries(Complex lam) : lambda(lam) {}

    /// Adds coeff * lambda^m; returns |term| for convergence checks.
    double add(Complex coeff) {
        const Complex term = coeff * pow_m;
        v += term;
        if (m >= 1) d += double(m) * coeff * pow_prev;
        pow_prev = pow_m;
        pow_m *= lambda;
        ++m;
        return std::abs(term);
    }
};

} // namespace

Complex ck(int k, Complex mu, double a, double b, Branch branch) {
    return sk_ck(k, mu, a, b, /*want_sin=*/false, branch);
}

Complex sk(int k, Complex mu, double a, double b, Branch branch) {
    return sk_ck(k, mu, a, b, /*want_sin=*/true, branch);
}

namespace {

constexpr Complex kI{0.0, 1.0};

Complex ek_series(int k, Complex mu, double a, double b) {
    const Complex imu = kI * mu;
    const int mmax = 60;
    PowerTable pw(a, b, k + mmax + 2);
    Complex sum = 0.0;
    Complex coef{1.0, 0.0}; // (i mu)^m / m!
    for (int m = 0; m <= mmax; ++m) {
        const Complex term = coef * pw.diff(k + m + 1);
        sum += term;
        if (m >= 2 && std::abs(term) <= kSeriesEps * std::abs(sum)) break;
        coef *= imu / double(m + 1);
    }
    return sum;
}

Complex ek_downward(int k, Complex mu, double a, double b) {
    const Complex imu = kI * mu;
    const Complex ea = std::exp(imu * a), eb = std::exp(imu * b);
    std::vector<Complex> stack(k + 1);
    stack[0] = (eb - ea) / imu;
    double pa = 1.0, pb = 1.0;
    for (int j = 1; j <= k; ++j) {
        pa *= a;
        pb *= b;
        stack[j] = (pb * eb - pa * ea) / imu - (double(j) / imu) * stack[j - 1];
    }
    return stack[k];
}

Complex ek_upward(int k, Complex mu, double a, double b) {
    const double tm = tmax_of(a, b);
    const double growth = std::exp(std::abs(std::imag(mu)) * tm);
    const Complex imu = kI * mu;
    const Complex ea = std::exp(imu * a), eb = std::exp(imu * b);
    Complex sum = 0.0;
    Complex coef{1.0, 0.0};
    double pa = std::pow(a, k + 1), pb = std::pow(b, k + 1);
    for (int j = k; j < k + 260; ++j) {
        sum += coef * (pb * eb - pa * ea) / double(j + 1);
        const Complex next_coef = -coef * imu / double(j + 1);
        const double rem = std::abs(next_coef) * growth * std::pow(tm, j + 2) / double(j + 2);
        if (rem <= kSeriesEps * std::max(std::abs(sum), 1e-300)) break;
        coef = next_coef;
        pa *= a;
        pb *= b;
    }
    return sum;
}

} // namespace

Complex ek(int k, Complex mu, double a, double b, Branch branch) {
    if (a == b) return {};
    const double scale = std::abs(mu) * tmax_of(a, b);
    if (branch == Branch::Series || (branch == Branch::Auto && scale < 1.0))
        return ek_series(k, mu, a, b);
    if (branch != Branch::Series && k >= 4 && scale < 0.6 * (k + 1))
        return ek_upward(k, mu, a, b);
    return ek_downward(k, mu, a, b);
}

Dual cexp(Complex lambda, double x) {
    const Complex rho = std::sqrt(lambda);
    const Complex v = std::exp(kI * rho * x);
    return {v, kI * x * v / (2.0 * rho)};
}

Dual div_2irho(const Dual& g, Complex lambda) {
    const Complex rho = std::sqrt(lambda);
    const Complex denom = 2.0 * kI * rho;
    return {g.v / denom, (g.d - g.v / (2.0 * lambda)) / denom};
}

Dual phi_s(Complex lambda, double x, Branch branch) {
    if (use_series(lambda, branch)) {
        const double x2 = x * x;
        LambdaSeries s(lambda);
        double cm = x; // (-1)^m x^(2m+1)/(2m+1)!
        for (int m = 0; m <= 32; ++m) {
            const double t = s.add(cm);
            if (m >= 2 && t <= kSeriesEps * std::abs(s.v)) break;
            cm *= -x2 / ((2.0 * m + 2) * (2.0 * m + 3));
        }
        return {s.v, s.d};
    }
    const Complex rho = std::sqrt(lambda);
    const Complex v = std::sin(rho * x) / rho;
    return {v, (x * std::cos(rho * x) - v) / (2.0 * lambda)};
}

Dual phi_c(Complex lambda, double x, Branch branch) {
    if (use_series(lambda, branch)) {
        const double x2 = x * x;
        LambdaSeries s(lambda);
        double cm = 1.0; // (-1)^m x^(2m)/(2m)!
        for (int m = 0; m <= 32; ++m) {
            const double t = s.add(cm);
            if (m >= 2 && t <= kSeriesEps * std::max(std::abs(s.v), 1e-300)) break;
            cm *= -x2 / ((2.0 * m + 1) * (2.0 * m + 2));
        }
        return {s.v, s.d};
    }
    const Complex rho = std::sqrt(lambda);
    return {std::cos(rho * x), -0.5 * x * std::sin(rho * x) / rho};
}

Dual cos_m1_over_lambda(Complex lambda, double x, Branch branch) {
    if (use_series(lambda, branch)) {
        const double x2 = x * x;
        LambdaSeries s(lambda);
        double cm = -x2 / 2.0; // (-1)^(i+1) x^(2i+2)/(2i+2)! at series index i
        for (int i = 0; i <= 32; ++i) {
            const double t = s.add(cm);
            if (i >= 2 && t <= kSeriesEps * std::abs(s.v)) break;
            cm *= -x2 / ((2.0 * i + 3) * (2.0 * i + 4));
        }
        return {s.v, s.d};
    }
    const Dual c = phi_c(lambda, x, branch);
    const Complex v = (c.v - 1.0) / lambda;
    return {v, (c.d - v) / lambda};
}

Dual pp_cos(Complex lambda, int k, double alpha, double beta, Branch branch) {
    if (alpha == beta) return {};
    if (use_series(lambda, branch)) {
        const int mmax = 32;
        PowerTable pw(alpha, beta, k + 2 * mmax + 2);
        LambdaSeries s(lambda);
        double cm = 1.0; // (-1)^m/(2m)!
        for (int m = 0; m <= mmax; ++m) {
            const double t = s.add(cm * pw.diff(k + 2 * m + 1));
            if (m >= 2 && t <= kSeriesEps * std::max(std::abs(s.v), 1e-300)) break;
            cm /= -((2.0 * m + 1) * (2.0 * m + 2));
        }
        return {s.v, s.d};
    }
    const Complex rho = std::sqrt(lambda);
    return {ck(k, rho, alpha, beta, branch), -sk(k + 1, rho, alpha, beta, branch) / (2.0 * rho)};
}

Dual pp_snc(Complex lambda, int k, double alpha, double beta, Branch branch) {
    if (alpha == beta) return {};
    if (use_series(lambda, branch)) {
        const int mmax = 32;
        PowerTable pw(alpha, beta, k + 2 * mmax + 3);
        LambdaSeries s(lambda);
        double cm = 1.0; // (-1)^m/(2m+1)!
        for (int m = 0; m <= mmax; ++m) {
            const double t = s.add(cm * pw.diff(k + 2 * m + 2));
            if (m >= 2 && t <= kSeriesEps * std::max(std::abs(s.v), 1e-300)) break;
            cm /= -((2.0 * m + 2) * (2.0 * m + 3));
        }
        return {s.v, s.d};
    }
    const Complex rho = std::sqrt(lambda);
    const Complex v = sk(k, rho, alpha, beta, branch) / rho;
    return {v, (ck(k + 1, rho, alpha, beta, branch) - v) / (2.0 * lambda)};
}

namespace {

Dual tb_series(Complex lambda, double omega, bool basis_sin, double alpha, double beta,
               bool snc_kernel) {
    const Complex w{omega, 0.0};
    LambdaSeries s(lambda);
    double cm = 1.0; // (-1)^m/(2m)! resp. (2m+1)!
    for (int m = 0; m <= 32; ++m) {
        const int j = snc_kernel ? 2 * m + 1 : 2 * m;
        const Complex bj = basis_sin ? sk(j, w, alpha, beta) : ck(j, w, alpha, beta);
        const double t = s.add(cm * bj);
        if (m >= 2 && t <= kSeriesEps * std::max(std::abs(s.v), 1e-300)) break;
        const double n1 = snc_kernel ? 2.0 * m + 2 : 2.0 * m + 1;
        const double n2 = snc_kernel ? 2.0 * m + 3 : 2.0 * m + 2;
        cm /= -(n1 * n2);
    }
    return {s.v, s.d};
}

} // namespace

Dual tb_cos(Complex lambda, double omega, bool basis_sin, double alpha, double beta, Branch branch) {
    if (alpha == beta) return {};
    if (use_series(lambda, branch)) return tb_series(lambda, omega, basis_sin, alpha, beta, false);
    const Complex rho = std::sqrt(lambda);
    const Complex wp = omega + rho, wm = omega - rho;
    if (basis_sin) {
        // cos(rho t) sin(omega t) = [sin((omega+rho)t) + sin((omega-rho)t)]/2
        const Complex v = 0.5 * (sk(0, wp, alpha, beta, branch) + sk(0, wm, alpha, beta, branch));
        const Complex d = (ck(1, wp, alpha, beta, branch) - ck(1, wm, alpha, beta, branch)) / (4.0 * rho);
        return {v, d};
    }
    // cos(rho t) cos(omega t) = [cos((omega-rho)t) + cos((omega+rho)t)]/2
    const Complex v = 0.5 * (ck(0, wm, alpha, beta, branch) + ck(0, wp, alpha, beta, branch));
    const Complex d = (sk(1, wm, alpha, beta, branch) - sk(1, wp, alpha, beta, branch)) / (4.0 * rho);
    return {v, d};
}

Dual tb_snc(Complex lambda, double omega, bool basis_sin, double alpha, double beta, Branch branch) {
    if (alpha == beta) return {};
    if (use_series(lambda, branch)) return tb_series(lambda, omega, basis_sin, alpha, beta, true);
    const Complex rho = std::sqrt(lambda);
    const Complex wp = omega + rho, wm = omega - rho;
    if (basis_sin) {
        // sin(rho t) sin(omega t)/rho = [cos((omega-rho)t) - cos((omega+rho)t)]/(2 rho)
        const Complex f = (ck(0, wm, alpha, beta, branch) - ck(0, wp, alpha, beta, branch)) / (2.0 * rho);
        const Complex fp = ((sk(1, wm, alpha, beta, branch) + sk(1, wp, alpha, beta, branch)) / 2.0 - f) / rho;
        return {f, fp / (2.0 * rho)};
    }
    // sin(rho t) cos(omega t)/rho = [sin((rho+omega)t) + sin((rho-omega)t)]/(2 rho)
    const Complex f = (sk(0, rho + omega, alpha, beta, branch) + sk(0, rho - omega, alpha, beta, branch)) / (2.0 * rho);
    const Complex fp = (ck(1, rho + omega, alpha, beta, branch) + ck(1, rho - omega, alpha, beta, branch)) / (2.0 * rho) - f / rho;
    return {f, fp / (2.0 * rho)};
}

} // namespace frospec::detail
