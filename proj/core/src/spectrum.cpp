#include "frospec/spectrum.hpp"

#include "frospec/detail/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace frospec {

namespace {

constexpr double kPi = std::numbers::pi;
/// Largest N for which |Delta_j| on Gamma_N stays within double range
/// (growth e^{|Im rho| pi} with |Im rho| up to N + 0.55).
constexpr int kMaxCertifiableN = 220;

double unperturbed(int j, int n) {
    const double base = n - 0.5 * j;
    return base * base;
}

struct NewtonResult {
    Complex lambda;
    double residual;
    bool converged;
    std::string reason;
};

NewtonResult newton_solve(const Problem& prob, int j, Complex guess, const LocateOptions& opts) {
    Complex lam = guess;
    auto eval = [&](Complex z) { return detail::delta_dual(j, z, prob).total; };
    // One extra Newton step once the residual tolerance is met: quadratic
    // convergence buys ~6 more digits for a single evaluation.
    auto polish = [&](Complex z, const detail::Dual& f) -> NewtonResult {
        if (f.d != Complex{}) {
            const Complex zp = z - f.v / f.d;
            const detail::Dual fp = eval(zp);
            if (std::abs(fp.v) <= std::abs(f.v)) return {zp, std::abs(fp.v), true, {}};
        }
        return {z, std::abs(f.v), true, {}};
    };
    detail::Dual f = eval(lam);
    for (int it = 0; it < opts.max_iterations; ++it) {
        const double scale = std::max(1.0, std::abs(f.d) * std::sqrt(std::abs(lam)));
        if (std::abs(f.v) <= opts.residual_tol * scale) return polish(lam, f);
        if (f.d == Complex{})
            return {lam, std::abs(f.v), false, "vanishing derivative"};
        Complex step = f.v / f.d;
        Complex trial = lam - step;
        detail::Dual ft = eval(trial);
        int halvings = 0;
        while (std::abs(ft.v) > std::abs(f.v) && halvings < 10) {
            step *= 0.5;
            trial = lam - step;
            ft = eval(trial);
            ++halvings;
        }
        if (std::abs(trial - lam) <= 1e-16 * (1.0 + std::abs(lam))) {
            const double sc = std::max(1.0, std::abs(ft.d) * std::sqrt(std::abs(trial)));
            if (std::abs(ft.v) <= 10.0 * opts.residual_tol * sc)
                return {trial, std::abs(ft.v), true, {}};
            return {trial, std::abs(ft.v), false, "stalled"};
        }
        lam = trial;
        f = ft;
    }
    const double scale = std::max(1.0, std::abs(f.d) * std::sqrt(std::abs(lam)));
    if (std::abs(f.v) <= 10.0 * opts.residual_tol * scale) return {lam, std::abs(f.v), true, {}};
    return {lam, std::abs(f.v), false, "no convergence after max iterations"};
}

struct WindingOutcome {
    int count = 0;
    bool ok = false;
};

/// Single-radius argument-principle pass; fails (ok = false) when the phase
/// step criterion cannot be met, which indicates a zero at or very near the
/// contour.
WindingOutcome winding_on_circle(const Problem& prob, int j, double radius_sqrt, int initial_samples) {
    const double R = radius_sqrt * radius_sqrt;
    int m = std::max(64, initial_samples);
    const int m_limit = 1 << 18;
    while (m <= m_limit) {
        std::vector<Complex> vals(m);
        bool degenerate = false;
        detail::parallel_for(m, [&](int k) {
            const double theta = 2.0 * kPi * k / m;
            const Complex lam = R * Complex{std::cos(theta), std::sin(theta)};
            vals[k] = detail::delta_dual(j, lam, prob).total.v;
        });
        for (const auto& v : vals)
            if (v == Complex{} || !std::isfinite(std::abs(v))) degenerate = true;
        if (!degenerate) {
            double total = 0.0;
            bool refine = false;
            for (int k = 0; k < m; ++k) {
                const Complex ratio = vals[(k + 1) % m] / vals[k];
                const double d = std::arg(ratio);
                if (std::abs(d) >= kPi / 2.0) {
                    refine = true;
                    break;
                }
                total += d;
            }
            if (!refine) {
                const double turns = total / (2.0 * kPi);
                const int count = int(std::lround(turns));
                if (std::abs(turns - count) < 0.25) return {count, true};
            }
        }
        m *= 2;
    }
    return {0, false};
}

/// Contour radius in the rho plane. The circle must run through the spectral
/// gap: for j = 0 the unperturbed zeros are n^2, so (N + 1/2)^2 sits midway;
/// for j = 1 they are (n - 1/2)^2 and the same circle would pass exactly
/// through the (N+1)-th zero, so the contour shifts to N^2.
double contour_radius_sqrt(int j, int N) { return j == 0 ? N + 0.5 : double(N); }

/// Recovery sweep when the winding count exceeds the located zeros: strong
/// coupling can merge two real eigenvalues into a complex pair whose members
/// the index-wise Newton runs miss. Seeds: conjugates of located complex
/// zeros (zeros pair up for real coefficients) and rings around the guesses
/// of the failed indices. Recovered zeros fill the failed indices in
/// magnitude order; anything beyond that is appended with indices > N so
/// extra zeros inside the contour are still reported.
void recover_missing_zeros(const Problem& prob, int j, int N, double R, int winding,
                           const LocateOptions& opts, Spectrum& spec) {
    std::vector<Complex> seeds;
    for (const auto& e : spec.eigenvalues)
        if (std::abs(e.lambda.imag()) > 1e-8)
            seeds.push_back(std::conj(e.lambda));
    for (const auto& f : spec.failures) {
        const double g = unperturbed(j, f.n);
        const double ring = std::max(1.0, 0.5 * g);
        for (int k = 0; k < 8; ++k) {
            const double th = 2.0 * kPi * k / 8.0;
            seeds.emplace_back(g + ring * std::cos(th), ring * std::sin(th));
        }
    }

    const auto known = [&](Complex lam) {
        for (const auto& e : spec.eigenvalues)
            if (std::abs(lam - e.lambda) < 1e-8 * std::max(1.0, std::abs(e.lambda))) return true;
        return false;
    };
    int inside_located = 0;
    for (const auto& e : spec.eigenvalues)
        if (std::abs(e.lambda) < R) ++inside_located;

    std::vector<Complex> found;
    for (const Complex seed : seeds) {
        if (inside_located + int(found.size()) >= winding) break;
        const auto r = newton_solve(prob, j, seed, opts);
        if (!r.converged || std::abs(r.lambda) >= R || known(r.lambda)) continue;
        bool dup = false;
        for (const Complex z : found)
            if (std::abs(r.lambda - z) < 1e-8 * std::max(1.0, std::abs(z))) dup = true;
        if (!dup) found.push_back(r.lambda);
    }
    if (found.empty()) return;

    std::sort(found.begin(), found.end(), [](Complex x, Complex y) {
        if (std::abs(x) != std::abs(y)) return std::abs(x) < std::abs(y);
        return x.imag() < y.imag();
    });
    std::vector<int> free_indices;
    for (const auto& f : spec.failures) free_indices.push_back(f.n);
    std::sort(free_indices.begin(), free_indices.end());
    int next_extra = N + 1;
    std::size_t fi = 0;
    for (const Complex lam : found) {
        const int n = fi < free_indices.size() ? free_indices[fi++] : next_extra++;
        const auto d = detail::delta_dual(j, lam, prob);
        spec.eigenvalues.push_back({n, lam, lam - unperturbed(j, n), std::abs(d.total.v)});
    }
    std::erase_if(spec.failures, [&](const FailureRecord& f) {
        return std::find(free_indices.begin(), free_indices.begin() + fi, f.n) !=
               free_indices.begin() + fi;
    });
    std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end(),
              [](const EigenRecord& x, const EigenRecord& y) { return x.n < y.n; });
}

} // namespace

int winding_count(const Problem& prob, int j, int N) {
    if (N < 1) throw PreconditionError("winding_count: N >= 1");
    if (N > kMaxCertifiableN)
        throw PreconditionError("winding_count: contour values overflow double range beyond N = 220");
    for (const double offset : {0.0, 0.05, -0.05}) {
        const auto out = winding_on_circle(prob, j, contour_radius_sqrt(j, N) + offset, 8 * N);
        if (out.ok) return out.count;
    }
    throw CertificationError("winding_count: zero persists near the contour after radius perturbation",
                             N, -1);
}

Spectrum locate_eigenvalues(const Problem& prob, int j, int N, const LocateOptions& opts) {
    if (N < 1) throw PreconditionError("locate_eigenvalues: N >= 1");
    Spectrum spec;
    spec.j = j;

    std::vector<NewtonResult> results(N);
    detail::parallel_for(N, [&](int idx) {
        results[idx] = newton_solve(prob, j, Complex{unperturbed(j, idx + 1), 0.0}, opts);
    });

    // Deflated restart when two indices collapse onto one zero.
    for (int idx = 0; idx < N; ++idx) {
        if (!results[idx].converged) continue;
        bool duplicate = false;
        for (int prev = 0; prev < idx; ++prev) {
            if (!results[prev].converged) continue;
            if (std::abs(results[idx].lambda - results[prev].lambda) <
                1e-8 * std::max(1.0, std::abs(results[prev].lambda))) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) continue;
        const double g = unperturbed(j, idx + 1);
        bool fixed = false;
        for (const double dir : {1.0, -1.0}) {
            const auto retry = newton_solve(prob, j, Complex{g, dir * (idx + 1)}, opts);
            if (!retry.converged) continue;
            bool still_dup = false;
            for (int prev = 0; prev < idx; ++prev)
                if (results[prev].converged &&
                    std::abs(retry.lambda - results[prev].lambda) <
                        1e-8 * std::max(1.0, std::abs(results[prev].lambda)))
                    still_dup = true;
            if (!still_dup) {
                results[idx] = retry;
                fixed = true;
                break;
            }
        }
        if (!fixed) {
            results[idx].converged = false;
            results[idx].reason = "converged to an already-located zero (possible multiplicity)";
        }
    }

    for (int idx = 0; idx < N; ++idx) {
        if (results[idx].converged) {
            const Complex lam = results[idx].lambda;
            spec.eigenvalues.push_back({idx + 1, lam, lam - unperturbed(j, idx + 1), results[idx].residual});
        } else {
            spec.failures.push_back({idx + 1, results[idx].reason});
        }
    }

    if (opts.certify && N <= kMaxCertifiableN) {
        const double rs = contour_radius_sqrt(j, N);
        const double R = rs * rs;
        const auto inside_count = [&] {
            int inside = 0;
            for (const auto& e : spec.eigenvalues)
                if (std::abs(e.lambda) < R) ++inside;
            return inside;
        };
        const int w = winding_count(prob, j, N);
        if (w != inside_count()) recover_missing_zeros(prob, j, N, R, w, opts, spec);
        const int inside = inside_count();
        if (w != inside)
            throw CertificationError(
                "locate_eigenvalues: winding count " + std::to_string(w) + " but " +
                    std::to_string(inside) + " zeros located inside the contour",
                inside, w);
        spec.certified_through = N;
    }
    return spec;
}

std::vector<AsymptoticRow> asymptotic_report(const Spectrum& spec) {
    std::vector<AsymptoticRow> rows;
    rows.reserve(spec.eigenvalues.size());
    double sum = 0.0;
    for (const auto& e : spec.eigenvalues) {
        sum += std::norm(e.kappa);
        rows.push_back({e.n, e.kappa, std::sqrt(sum)});
    }
    return rows;
}

} // namespace frospec
