// Command-line front door: forward spectral computation, trace tables,
// iso-spectral demonstrations, and reconstruction from two spectra.
//
// Exit codes: 0 success, 1 domain failure (certification, inconsistent
// reconstruction, failed verification), 2 usage errors (bad flags, malformed
// input files).

#include "frospec/fixtures.hpp"
#include "frospec/serialization.hpp"
#include "frospec/verification.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>

namespace {

using namespace frospec;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json load_json(const std::string& path) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError("malformed JSON in " + path + ": " + e.what());
    }
}

std::vector<double> parse_range(const std::string& spec) {
    double lo = 0.0, step = 0.0, hi = 0.0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &step, &hi) != 3 || step <= 0.0)
        throw UsageError("grid spec must be lo:step:hi with step > 0, got '" + spec + "'");
    std::vector<double> out;
    for (double v = lo; v <= hi + 0.5 * step; v += step) out.push_back(v);
    return out;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file_atomic(out_path, content);
}

int cmd_charfn(const std::string& problem_path, int j, const std::string& grid_spec,
               double arg, const std::string& format, const std::string& out_path) {
    const Problem prob = problem_from_json(load_json(problem_path));
    const Complex ray{std::cos(arg), std::sin(arg)};
    std::vector<CharEval> rows;
    for (const double r : parse_range(grid_spec)) rows.push_back(delta_expanded(j, r * ray, prob));
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& e : rows) arr.push_back(to_json(e));
        emit(out_path, arr.dump(2) + "\n");
    } else {
        emit(out_path, char_grid_to_csv(rows));
    }
    return 0;
}

int cmd_spectrum(const std::string& problem_path, int j, int n, const std::string& format,
                 bool no_certify, const std::string& out_path) {
    const Problem prob = problem_from_json(load_json(problem_path));
    LocateOptions opts;
    opts.certify = !no_certify && n <= 220;
    const Spectrum spec = locate_eigenvalues(prob, j, n, opts);
    if (!spec.failures.empty()) {
        for (const auto& f : spec.failures)
            std::cerr << "index " << f.n << ": " << f.reason << "\n";
        throw CertificationError("eigenvalue location failed for " +
                                     std::to_string(spec.failures.size()) + " indices",
                                 n, int(spec.eigenvalues.size()));
    }
    emit(out_path, format == "json" ? to_json(spec).dump(2) + "\n" : spectrum_to_csv(spec));
    return 0;
}

int cmd_trace(const std::string& problem_path, int j, int n, const std::string& out_path) {
    const Problem prob = problem_from_json(load_json(problem_path));
    emit(out_path, trace_rows_to_csv(trace_compare(prob, j, n)));
    return 0;
}

int cmd_nonuniq_demo(double a, double b, const std::string& bump_path,
                     const std::string& out_dir, const std::string& grid_spec) {
    const BumpSpec bump = bump_from_json(load_json(bump_path));
    const auto [s, r] = build_sr(bump, a, b);
    const auto [pair1, pair2] = confusable_pairs(s, r);
    const Problem prob1(a, b, pair1.p, pair1.q);
    const Problem prob2(a, b, pair2.p, pair2.q);
    write_file_atomic(out_dir + "/pair1.json", to_json(prob1).dump(2) + "\n");
    write_file_atomic(out_dir + "/pair2.json", to_json(prob2).dump(2) + "\n");

    std::vector<Complex> grid;
    for (const double v : parse_range(grid_spec)) grid.emplace_back(v, 0.0);
    const CoincidenceReport report = verify_coincidence(pair1, pair2, a, b, grid);
    const Json rj{{"max_delta_discrepancy", report.max_delta_discrepancy},
                  {"max_eigenvalue_diff", report.max_eigenvalue_diff},
                  {"eigenvalues_compared", report.eigenvalues_compared},
                  {"pair1", out_dir + "/pair1.json"},
                  {"pair2", out_dir + "/pair2.json"}};
    write_file_atomic(out_dir + "/coincidence.json", rj.dump(2) + "\n");
    std::cout << rj.dump(2) << "\n";
    return 0;
}

int cmd_reconstruct(const std::string& spectra_path, double a, double b, int m,
                    double consistency_tol, const std::string& out_path) {
    const Json j = load_json(spectra_path);
    SpectraPair pair(spectrum_from_json(j.at("spec0"), 0), spectrum_from_json(j.at("spec1"), 1));
    const ReconstructionResult result = reconstruct(pair, a, b, m);
    Json out{{"problem", to_json(Problem(a, b, result.p, result.q))},
             {"diagnostics", to_json(result)}};
    out["diagnostics"].erase("p");
    out["diagnostics"].erase("q");
    emit(out_path, out.dump(2) + "\n");
    const double support_residual = result.residuals.at("g0_support_max");
    if (support_residual > consistency_tol) {
        std::cerr << "reconstruction inconsistent: data function g0 reaches " << support_residual
                  << " on [0, b] (tolerance " << consistency_tol << ")\n";
        return kExitDomain;
    }
    return 0;
}

int cmd_verify(const std::string& suite) {
    const auto checks = run_verification(suite);
    bool all_ok = true;
    for (const auto& c : checks) {
        std::printf("%s %-45s measured %.3e threshold %.3e\n", c.passed ? "PASS" : "FAIL",
                    c.name.c_str(), c.measured, c.threshold);
        all_ok = all_ok && c.passed;
    }
    std::printf("%s: %zu checks\n", all_ok ? "OK" : "FAILED", checks.size());
    return all_ok ? 0 : kExitDomain;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral toolkit for Sturm-Liouville problems with two frozen arguments"};
    app.require_subcommand(1);

    std::string problem_path, out_path, format = "csv", grid_spec = "0:0.5:400";
    std::string bump_path, out_dir = ".", spectra_path, suite = "all";
    int j = 0, n = 200, m = 150;
    double a = 0.0, b = 0.0, arg = 0.0, consistency_tol = 0.05;
    bool no_certify = false;

    auto* charfn = app.add_subcommand("charfn", "Export characteristic-function samples as CSV");
    charfn->add_option("--problem", problem_path, "Problem JSON file")->required();
    charfn->add_option("--j", j, "Boundary condition index (0 or 1)")->check(CLI::Range(0, 1));
    charfn->add_option("--grid", grid_spec, "Real grid lo:step:hi for |lambda|");
    charfn->add_option("--arg", arg, "Ray angle: lambda = r exp(i arg)");
    charfn->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    charfn->add_option("--out", out_path, "Output file (stdout if omitted)");

    auto* spectrum = app.add_subcommand("spectrum", "Locate and certify eigenvalues");
    spectrum->add_option("--problem", problem_path, "Problem JSON file")->required();
    spectrum->add_option("--j", j, "Boundary condition index (0 or 1)")->check(CLI::Range(0, 1));
    spectrum->add_option("--n", n, "Number of eigenvalues")->check(CLI::Range(1, 5000));
    spectrum->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    spectrum->add_flag("--no-certify", no_certify, "Skip the winding-number certification");
    spectrum->add_option("--out", out_path, "Output file (stdout if omitted)");

    auto* trace = app.add_subcommand("trace", "Regularized-trace comparison table");
    trace->add_option("--problem", problem_path, "Problem JSON file")->required();
    trace->add_option("--j", j, "Boundary condition index (0 or 1)")->check(CLI::Range(0, 1));
    trace->add_option("--n", n, "Number of rows")->check(CLI::Range(1, 5000));
    trace->add_option("--out", out_path, "Output file (stdout if omitted)");

    auto* demo = app.add_subcommand("nonuniq-demo",
                                    "Emit two coefficient pairs with identical spectra");
    demo->add_option("--a", a, "First frozen argument")->required();
    demo->add_option("--b", b, "Second frozen argument")->required();
    demo->add_option("--bump", bump_path, "Bump JSON file {\"T\":..., \"g\":FunctionRep}")->required();
    demo->add_option("--out-dir", out_dir, "Directory for pair1.json/pair2.json");
    demo->add_option("--grid", grid_spec, "Real lambda grid lo:step:hi for the comparison");

    auto* rec = app.add_subcommand("reconstruct", "Recover (p, q) from two spectra");
    rec->add_option("--spectra", spectra_path, "JSON file {\"spec0\":[...],\"spec1\":[...]}")
        ->required();
    rec->add_option("--a", a, "First frozen argument")->required();
    rec->add_option("--b", b, "Second frozen argument")->required();
    rec->add_option("--m", m, "Fourier truncation order")->check(CLI::Range(1, 5000));
    rec->add_option("--consistency-tol", consistency_tol,
                    "Max allowed |g0| on [0,b] before the run counts as inconsistent");
    rec->add_option("--out", out_path, "Output file (stdout if omitted)");

    auto* verify = app.add_subcommand("verify", "Run the invariant suites");
    verify->add_option("--suite", suite,
                       "funcrep|charfn|spectrum|nonuniq|traces|inverse|serialization|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(charfn))
            return cmd_charfn(problem_path, j, grid_spec, arg, format, out_path);
        if (app.got_subcommand(spectrum))
            return cmd_spectrum(problem_path, j, n, format, no_certify, out_path);
        if (app.got_subcommand(trace)) return cmd_trace(problem_path, j, n, out_path);
        if (app.got_subcommand(demo)) return cmd_nonuniq_demo(a, b, bump_path, out_dir, grid_spec);
        if (app.got_subcommand(rec))
            return cmd_reconstruct(spectra_path, a, b, m, consistency_tol, out_path);
        if (app.got_subcommand(verify)) return cmd_verify(suite);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedVariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::exception& e) {
        std::cerr << "error: invalid input file: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CertificationError& e) {
        std::cerr << "certification error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
