#include "frospec/verification.hpp"

#include "frospec/fixtures.hpp"
#include "frospec/inverse.hpp"
#include "frospec/serialization.hpp"
#include "frospec/traces.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace frospec {

namespace {

constexpr double kPi = std::numbers::pi;

using Checks = std::vector<CheckResult>;

void record(Checks& out, const std::string& name, double measured, double threshold) {
    out.push_back({name, measured <= threshold, measured, threshold});
}

FunctionRep random_piecewise(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> npieces(2, 5);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_real_distribution<double> amp(-0.8, 0.8);
    const int m = npieces(rng);
    std::vector<double> breaks{0.0};
    for (int i = 1; i < m; ++i) breaks.push_back(unif(rng) * kPi);
    breaks.push_back(kPi);
    std::sort(breaks.begin(), breaks.end());
    for (std::size_t i = 1; i < breaks.size(); ++i)
        if (breaks[i] - breaks[i - 1] < 1e-3) breaks[i] = breaks[i - 1] + 1e-3;
    breaks.back() = kPi;
    std::vector<std::array<Complex, 4>> coeffs(m);
    for (auto& c : coeffs)
        for (int k = 0; k <= max_degree; ++k) c[k] = Complex{amp(rng), 0.2 * amp(rng)};
    return FunctionRep::piecewise(std::move(breaks), std::move(coeffs));
}

} // namespace

std::vector<Problem> random_problems(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<Problem> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double a = 0.2 + 0.8 * unif(rng);          // in (0.2, 1.0)
        const double b = a + 0.2 + (kPi - a - 0.4) * unif(rng);
        out.emplace_back(a, std::min(b, kPi - 0.15), random_piecewise(rng, 2),
                         random_piecewise(rng, 2));
    }
    return out;
}

std::vector<Complex> lambda_grid() {
    std::vector<Complex> grid;
    const auto ray = [&](double arg, std::initializer_list<double> radii) {
        for (const double r : radii) grid.push_back(r * Complex{std::cos(arg), std::sin(arg)});
    };
    ray(0.0, {0.05, 0.8, 2.2, 5.5, 9.7, 14.0, 31.0, 77.0, 160.0, 288.0, 500.0});
    ray(1e-3, {0.03, 0.4, 4.4, 19.0, 101.0, 350.0, 500.0});
    ray(-1e-3, {2.2, 31.0, 260.0});
    ray(kPi / 4.0, {0.4, 2.2, 9.7, 31.0, 77.0, 130.0, 200.0});
    ray(kPi / 2.0, {0.03, 0.4, 2.2, 9.7, 20.0, 31.0, 44.0});
    ray(kPi - 1e-3, {0.4, 1.5, 4.4, 9.7, 16.0});
    return grid; // 40 points
}

std::vector<Complex> mild_lambda_grid() {
    std::vector<Complex> grid;
    for (int i = 0; i < 24; ++i) grid.emplace_back(-5.0 + 405.0 * i / 23.0, 0.0);
    const auto ray = [&](double arg, std::initializer_list<double> radii) {
        for (const double r : radii) grid.push_back(r * Complex{std::cos(arg), std::sin(arg)});
    };
    ray(kPi / 4.0, {0.7, 3.3, 12.0, 40.0});
    ray(kPi / 2.0, {0.7, 3.3, 12.0});
    ray(kPi - 1e-3, {0.7, 3.3, 8.0});
    return grid;
}

namespace {

Checks suite_funcrep() {
    Checks out;
    std::mt19937_64 rng(7u);
    std::vector<FunctionRep> funcs;
    for (int i = 0; i < 4; ++i) funcs.push_back(random_piecewise(rng, 3));
    funcs.push_back(FunctionRep::trig(TrigBasis::Sine, {{0.3, 0.0}, {0.0, 0.0}, {-0.7, 0.1}}));
    funcs.push_back(FunctionRep::trig(TrigBasis::HalfCosine, {{1.0, 0.0}, {0.2, -0.3}}));

    // parity in rho: cos moments even, sin moments odd
    double parity = 0.0;
    const double rho_abs[] = {0.01, 0.5, 1.0, 2.5, 7.0, 15.5};
    for (const auto& f : funcs)
        for (const double r : rho_abs)
            for (int imag = 0; imag < 2; ++imag) {
                const Complex rv = imag ? Complex{0.0, r} : Complex{r, 0.0};
                for (const auto mode : {ShiftMode::ArgT, ShiftMode::ArgDMinusT, ShiftMode::ArgTMinusC}) {
                    const Complex sp = moment_integral(f, Rho(rv), Kind::Sin, 0.3, 2.9, mode);
                    const Complex sm = moment_integral(f, Rho(-rv), Kind::Sin, 0.3, 2.9, mode);
                    const Complex cp = moment_integral(f, Rho(rv), Kind::Cos, 0.3, 2.9, mode);
                    const Complex cm = moment_integral(f, Rho(-rv), Kind::Cos, 0.3, 2.9, mode);
                    const double scale = 1.0 + std::max(std::abs(sp), std::abs(cp));
                    parity = std::max(parity, std::abs(sp + sm) / scale);
                    parity = std::max(parity, std::abs(cp - cm) / scale);
                }
            }
    record(out, "funcrep/moment parity in rho", parity, 1e-13);

    // series and closed branches agree across the overlap band
    double overlap = 0.0;
    for (const auto& f : funcs)
        for (double r = 0.4; r <= 0.6005; r += 0.025)
            for (int imag = 0; imag < 2; ++imag) {
                const Complex rv = imag ? Complex{0.0, r} : Complex{r, 0.0};
                const Complex lam = rv * rv;
                const auto ds = detail::snc_moment(f, lam, 0.0, kPi, detail::Branch::Series);
                const auto dc = detail::snc_moment(f, lam, 0.0, kPi, detail::Branch::Closed);
                const auto es = detail::cos_moment(f, lam, 0.0, kPi, detail::Branch::Series);
                const auto ec = detail::cos_moment(f, lam, 0.0, kPi, detail::Branch::Closed);
                overlap = std::max(overlap, std::abs(ds.v - dc.v) / (1.0 + std::abs(ds.v)));
                overlap = std::max(overlap, std::abs(es.v - ec.v) / (1.0 + std::abs(es.v)));
            }
    record(out, "funcrep/series-closed overlap band", overlap, 1e-12);

    // Reflecting twice restores the function on a 1000-point grid. For
    // c != pi the zero extension truncates anything reflected outside
    // [0, pi], so the test keeps the support inside [c - pi, c].
    double invol = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double c = 1.9;
        const FunctionRep f = restrict_to(random_piecewise(rng, 3), 0.05, c - 0.05);
        const FunctionRep g = shift_reflect(shift_reflect(f, c), c);
        const FunctionRep full = random_piecewise(rng, 3);
        const FunctionRep full2 = shift_reflect(shift_reflect(full, kPi), kPi);
        for (int k = 1; k < 1000; ++k) {
            const double t = kPi * k / 1000.0;
            invol = std::max(invol, std::abs(eval(f, t) - eval(g, t)));
            invol = std::max(invol, std::abs(eval(full, t) - eval(full2, t)));
        }
    }
    record(out, "funcrep/shift_reflect involution", invol, 1e-13);

    // linear_combine identities
    double lc = 0.0;
    const FunctionRep f0 = random_piecewise(rng, 3);
    const FunctionRep sum = linear_combine(1.0, f0, -1.0, f0);
    lc = std::max(lc, l2_norm(sum));
    const FunctionRep id = linear_combine(1.0, f0, 0.0, random_piecewise(rng, 2));
    lc = std::max(lc, l2_distance(id, f0));
    record(out, "funcrep/linear_combine identities", lc, 1e-13);
    return out;
}

Checks suite_charfn() {
    Checks out;
    const auto problems = random_problems(20);
    const auto grid = lambda_grid();

    double dual_path = 0.0;
    for (const auto& prob : problems)
        for (int j = 0; j < 2; ++j)
            for (const Complex lam : grid) {
                const Complex expanded = delta_expanded(j, lam, prob).total;
                const Complex det = delta_determinant(j, lam, prob);
                dual_path = std::max(dual_path,
                                     std::abs(det - expanded) / (1.0 + std::abs(expanded)));
            }
    record(out, "charfn/dual-path determinant identity", dual_path, 1e-10);

    // evenness under rho -> -rho
    double even = 0.0;
    const Problem& pr = problems.front();
    for (const double r : {0.7, 2.3, 9.1}) {
        for (int j = 0; j < 2; ++j) {
            const Complex rv{r, 0.3};
            const Complex vp = moment_integral(pr.p, Rho(rv), Kind::Cos, 0.0, kPi, ShiftMode::ArgT);
            const Complex vm = moment_integral(pr.p, Rho(-rv), Kind::Cos, 0.0, kPi, ShiftMode::ArgT);
            even = std::max(even, std::abs(vp - vm) / (1.0 + std::abs(vp)));
            (void)j;
        }
    }
    record(out, "charfn/evenness in rho", even, 1e-14);

    // A_j against the kernel-density integral of W_j
    double aw = 0.0;
    for (int pi_idx = 0; pi_idx < 3; ++pi_idx) {
        const Problem& prob = problems[pi_idx];
        const FunctionRep w0 = w_function(0, prob.p, prob.q, prob.a, prob.b);
        const FunctionRep w1 = w_function(1, prob.p, prob.q, prob.a, prob.b);
        for (int i = 0; i < 10; ++i) {
            const double rho = 0.37 + 1.13 * i; // stays off the integers
            const Complex lam{rho * rho, 0.0};
            const Complex a0 = a_term(0, 0, lam, prob) + a_term(0, 1, lam, prob);
            const Complex rhs0 = 0.5 * detail::cos_moment(w0, lam, 0.0, kPi).v / lam;
            aw = std::max(aw, std::abs(a0 - rhs0) / (1.0 + std::abs(a0)));
            const Complex a1 = a_term(1, 0, lam, prob) + a_term(1, 1, lam, prob);
            const Complex rhs1 = 0.5 * detail::snc_moment(w1, lam, 0.0, kPi).v;
            aw = std::max(aw, std::abs(a1 - rhs1) / (1.0 + std::abs(a1)));
        }
    }
    record(out, "charfn/A_j equals kernel-density integral", aw, 1e-10);

    // bilinearity and antisymmetry of the coupling term
    double bil = 0.0;
    {
        const Problem& prob = problems[1];
        std::mt19937_64 rng(11u);
        const FunctionRep p2 = random_piecewise(rng, 2);
        const Complex a1{0.7, -0.3}, a2{-1.1, 0.45};
        for (const Complex lam : {Complex{3.7, 0.0}, Complex{25.0, 11.0}, Complex{-9.0, 1.0}}) {
            for (int j = 0; j < 2; ++j) {
                const Complex lhs = b_term(j, lam,
                                           linear_combine(a1, prob.p, a2, p2), prob.q,
                                           prob.a, prob.b);
                const Complex rhs = a1 * b_term(j, lam, prob.p, prob.q, prob.a, prob.b) +
                                    a2 * b_term(j, lam, p2, prob.q, prob.a, prob.b);
                bil = std::max(bil, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
                const Complex fwd = b_term(j, lam, prob.p, prob.q, prob.a, prob.b);
                const Complex rev = b_term(j, lam, prob.q, prob.p, prob.a, prob.b);
                bil = std::max(bil, std::abs(fwd + rev) / (1.0 + std::abs(fwd)));
            }
        }
    }
    record(out, "charfn/b_term bilinearity and antisymmetry", bil, 1e-12);

    // support vanishing: both branches of the zero condition
    double support = 0.0;
    {
        const double a = 1.0, b = 1.8;
        const FunctionRep left_p = FunctionRep::indicator(0.1, 0.8);
        const FunctionRep left_q = fixtures::cubic_bump(0.2, 0.9, Complex{0.7, 0.2});
        const Problem right = fixtures::right_supported_box();
        for (const Complex lam : lambda_grid()) {
            for (int j = 0; j < 2; ++j) {
                support = std::max(support, std::abs(b_term(j, lam, left_p, left_q, a, b)));
                support = std::max(
                    support, std::abs(b_term(j, lam, right.p, right.q, right.a, right.b)));
            }
        }
    }
    record(out, "charfn/b_term support vanishing", support, 1e-12);

    // the eight-term kernel density integrates to zero
    double wint = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Problem& prob = problems[i + 3];
        for (int j = 0; j < 2; ++j)
            wint = std::max(wint,
                            std::abs(integral(w_function(j, prob.p, prob.q, prob.a, prob.b)) *
                                     (j == 0 ? 1.0 : 0.0)));
    }
    record(out, "charfn/W0 zero mean", wint, 1e-12);

    // u0 +- u1 reassemble W0 and W1 pointwise
    double uw = 0.0;
    {
        const Problem& prob = problems[5];
        const FunctionRep w0 = w_function(0, prob.p, prob.q, prob.a, prob.b);
        const FunctionRep w1 = w_function(1, prob.p, prob.q, prob.a, prob.b);
        const FunctionRep u0 = u_function(0, prob.p, prob.q, prob.a, prob.b);
        const FunctionRep u1 = u_function(1, prob.p, prob.q, prob.a, prob.b);
        for (int k = 1; k < 500; ++k) {
            const double t = kPi * k / 500.0;
            uw = std::max(uw, std::abs(eval(u0, t) + eval(u1, t) - eval(w0, t)));
            uw = std::max(uw, std::abs(eval(u0, t) - eval(u1, t) - eval(w1, t)));
        }
    }
    record(out, "charfn/u functions recombine to W", uw, 1e-12);
    return out;
}

Checks suite_spectrum() {
    Checks out;
    const Problem zero(1.0, 2.0, FunctionRep::zero(), FunctionRep::zero());

    double unpert = 0.0;
    for (int j = 0; j < 2; ++j) {
        const Spectrum s = locate_eigenvalues(zero, j, 20);
        for (const auto& e : s.eigenvalues) {
            const double base = e.n - 0.5 * j;
            unpert = std::max(unpert, std::abs(e.lambda - base * base));
        }
    }
    record(out, "spectrum/unperturbed eigenvalues exact", unpert, 1e-12);

    double winding_err = 0.0;
    winding_err = std::max(winding_err, std::abs(winding_count(zero, 0, 7) - 7.0));
    winding_err = std::max(winding_err, std::abs(winding_count(zero, 1, 7) - 7.0));
    record(out, "spectrum/unperturbed winding count", winding_err, 0.0);

    // residual bound at every accepted eigenvalue of the demo problem
    double resid = 0.0;
    const auto demo = fixtures::confusable_demo();
    for (int j = 0; j < 2; ++j) {
        const Spectrum s = locate_eigenvalues(demo.pair1, j, 15);
        for (const auto& e : s.eigenvalues) {
            const auto d = detail::delta_dual(j, e.lambda, demo.pair1);
            const double scale = std::max(1.0, std::abs(d.total.d) * std::sqrt(std::abs(e.lambda)));
            resid = std::max(resid, std::abs(d.total.v) / scale);
        }
    }
    record(out, "spectrum/residual bound", resid, 1e-10);
    return out;
}

Checks suite_nonuniq() {
    Checks out;
    const auto grid = mild_lambda_grid();

    // random admissible bumps annihilate A_j
    double annihilation = 0.0;
    std::mt19937_64 rng(23u);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double a = 0.4 + 0.7 * unif(rng);
        const double b = a + 0.3 + (kPi - a - 0.5) * unif(rng);
        const double tmax = admissible_T(a, b);
        const double T = tmax * (0.4 + 0.6 * unif(rng));
        // random piecewise-linear profile on [0, T]
        const double knee = T * (0.3 + 0.4 * unif(rng));
        const double v0 = 0.4 + unif(rng), v1 = -1.0 + 2.0 * unif(rng);
        const FunctionRep g = linear_combine(
            1.0, FunctionRep::cubic_on(0.0, knee, {Complex{v0, 0.0}, Complex{(v1 - v0) / knee, 0.0}}),
            1.0, FunctionRep::cubic_on(knee, T, {Complex{v1, 0.0}, Complex{-v1 / (T - knee), 0.0}}));
        const auto [s, r] = build_sr(BumpSpec{g, T}, a, b);
        const Problem prob(a, b, s, r);
        for (int j = 0; j < 2; ++j)
            for (const Complex lam : grid)
                annihilation = std::max(
                    annihilation, std::abs(a_term(j, 0, lam, prob) + a_term(j, 1, lam, prob)));
    }
    record(out, "nonuniq/random bumps annihilate A_j", annihilation, 1e-11);

    const auto demo = fixtures::confusable_demo();
    double coincide = 0.0;
    for (int j = 0; j < 2; ++j)
        for (const Complex lam : lambda_grid()) {
            const Complex d1 = delta_expanded(j, lam, demo.pair1).total;
            const Complex d2 = delta_expanded(j, lam, demo.pair2).total;
            coincide = std::max(coincide, std::abs(d1 - d2) / (1.0 + std::abs(d1)));
        }
    record(out, "nonuniq/demo pair delta coincidence", coincide, 1e-10);

    // closed-form transcription vs assembled evaluation, real grid
    double closed = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double lam = -5.0 + 405.0 * i / 49.0;
        for (int j = 0; j < 2; ++j) {
            const Complex d = delta_expanded(j, Complex{lam, 0.0}, demo.pair1).total;
            const Complex ref = fixtures::confusable_demo_delta(j, Complex{lam, 0.0});
            closed = std::max(closed, std::abs(d - ref) / (1.0 + std::abs(ref)));
        }
    }
    record(out, "nonuniq/demo closed forms match", closed, 1e-10);

    const double dist = l2_distance(demo.pair1.p, demo.pair2.p);
    record(out, "nonuniq/pairs distinct", dist > 0.1 ? 0.0 : 1.0, 0.0);
    return out;
}

Checks suite_traces() {
    Checks out;

    // s = a + b exactly, and the mirrored pair cancels term by term
    const Problem mirrored = fixtures::sign_series_mirrored();
    const auto rows = trace_coefficients(mirrored, 0, 50);
    double mirror = 0.0, sform = 0.0;
    double divergence_sum = 0.0;
    for (const auto& r : rows) {
        sform = std::max(sform, std::abs(r.s - (r.a + r.b)));
        mirror = std::max(mirror, std::abs(r.b + r.a)); // b_n0 = -a_n0
        if (r.n <= 20) divergence_sum += r.a.real();
    }
    record(out, "traces/s equals a+b", sform, 0.0);
    record(out, "traces/mirrored pair cancels", mirror, 1e-14);
    record(out, "traces/divergence witness sum > 1", divergence_sum > 1.0 ? 0.0 : 1.0, 0.0);

    // sign-pattern coefficients: sqrt(3)/(2n) off multiples of 3
    double pattern = 0.0;
    for (const auto& r : rows) {
        const double expected = (r.n % 3 == 0) ? 0.0 : std::sqrt(3.0) / (2.0 * r.n);
        pattern = std::max(pattern, std::abs(r.a - expected));
    }
    record(out, "traces/sign-series coefficient pattern", pattern, 1e-13);
    return out;
}

Checks suite_inverse() {
    Checks out;

    // window-count formula against a direct scan
    double wc = 0.0;
    {
        std::mt19937_64 rng(31u);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (int i = 0; i < 50; ++i) {
            const double a = 0.2 + unif(rng);
            const double b = a + 0.05 + (kPi - a - 0.1) * unif(rng);
            const auto res = staircase_solve(FunctionRep::zero(), FunctionRep::zero(), a, b);
            int n = 0;
            while (b + n * (b - a) < kPi - 1e-12) ++n;
            n = std::max(n, 1);
            wc = std::max(wc, std::abs(double(res.window_count - n)));
        }
    }
    record(out, "inverse/window count formula", wc, 0.0);

    // exact staircase round trip on both right-supported fixtures
    double exact = 0.0;
    for (const Problem& prob :
         {fixtures::right_supported_smooth(), fixtures::right_supported_smooth_wide(),
          fixtures::right_supported_box()}) {
        const FunctionRep w0 = w_function(0, prob.p, prob.q, prob.a, prob.b);
        const FunctionRep w1 = w_function(1, prob.p, prob.q, prob.a, prob.b);
        const auto res = staircase_solve(w0, w1, prob.a, prob.b);
        exact = std::max(exact, l2_distance(res.p, prob.p) / std::max(1e-12, l2_norm(prob.p)));
        exact = std::max(exact, l2_distance(res.q, prob.q) / std::max(1e-12, l2_norm(prob.q)));
    }
    record(out, "inverse/staircase exact on exact data", exact, 1e-10);

    // support postcondition
    double support = 0.0;
    {
        const Problem prob = fixtures::right_supported_smooth();
        const FunctionRep w0 = w_function(0, prob.p, prob.q, prob.a, prob.b);
        const FunctionRep w1 = w_function(1, prob.p, prob.q, prob.a, prob.b);
        const auto res = staircase_solve(w0, w1, prob.a, prob.b);
        for (int k = 1; k < 200; ++k) {
            const double t = (prob.b - 1e-12) * k / 200.0;
            support = std::max(support, std::abs(eval(res.p, t)));
            support = std::max(support, std::abs(eval(res.q, t)));
        }
    }
    record(out, "inverse/reconstruction vanishes on [0,b]", support, 1e-12);

    // spectral product converges to the assembled characteristic function
    double prod_err = 0.0;
    {
        const Problem prob = fixtures::right_supported_smooth();
        LocateOptions opts;
        opts.certify = false;
        const Spectrum s0 = locate_eigenvalues(prob, 0, 60, opts);
        const Complex lam{10.3, 0.0};
        const Complex truth = delta_expanded(0, lam, prob).total;
        const Complex approx = delta_from_spectrum(0, s0, lam);
        prod_err = std::abs(approx - truth) / (1.0 + std::abs(truth));
    }
    record(out, "inverse/spectral product at N=60", prod_err, 5e-3);
    return out;
}

Checks suite_serialization() {
    Checks out;
    double rt = 0.0;
    const auto demo = fixtures::confusable_demo();
    const Json j1 = to_json(demo.pair1);
    const Problem back = problem_from_json(j1);
    const Json j2 = to_json(back);
    rt = (j1 == j2) ? 0.0 : 1.0;
    const Problem trig = fixtures::smooth_trace_problem();
    const Json t1 = to_json(trig);
    const Json t2 = to_json(problem_from_json(t1));
    rt = std::max(rt, (t1 == t2) ? 0.0 : 1.0);
    record(out, "serialization/problem round trip fixed point", rt, 0.0);
    return out;
}

} // namespace

std::vector<CheckResult> run_verification(const std::string& suite) {
    Checks out;
    const auto want = [&](const char* name) { return suite == "all" || suite == name; };
    const auto append = [&](Checks more) {
        for (auto& c : more) out.push_back(std::move(c));
    };
    bool known = false;
    if (want("funcrep")) { append(suite_funcrep()); known = true; }
    if (want("charfn")) { append(suite_charfn()); known = true; }
    if (want("spectrum")) { append(suite_spectrum()); known = true; }
    if (want("nonuniq")) { append(suite_nonuniq()); known = true; }
    if (want("traces")) { append(suite_traces()); known = true; }
    if (want("inverse")) { append(suite_inverse()); known = true; }
    if (want("serialization")) { append(suite_serialization()); known = true; }
    if (!known) throw PreconditionError("unknown verification suite '" + suite + "'");
    return out;
}

} // namespace frospec
