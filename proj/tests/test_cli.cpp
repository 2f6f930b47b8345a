#include "frospec/fixtures.hpp"
#include "frospec/serialization.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

using namespace frospec;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct Sandbox {
    fs::path dir;
    Sandbox() {
        dir = fs::temp_directory_path() /
              ("frospec_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
        fs::create_directories(dir);
    }
    ~Sandbox() { fs::remove_all(dir); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run_cli(const std::string& args) {
    const std::string cmd = std::string(FROSPEC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) { return read_file(path); }

void write_zero_problem(const std::string& path) {
    const Problem zero(1.0, 2.0, FunctionRep::zero(), FunctionRep::zero());
    write_file_atomic(path, to_json(zero).dump());
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("spectrum subcommand: unperturbed eigenvalues as CSV") {
    Sandbox box;
    write_zero_problem(box.path("zero.json"));
    const int rc = run_cli("spectrum --problem " + box.path("zero.json") + " --j 0 --n 5 --out " +
                           box.path("spec.csv"));
    REQUIRE(rc == 0);
    const auto lines = lines_of(slurp(box.path("spec.csv")));
    REQUIRE(lines.size() == 6); // header + 5 rows
    for (int n = 1; n <= 5; ++n) {
        double re = 0.0;
        int idx = 0;
        std::sscanf(lines[n].c_str(), "%d,%lf", &idx, &re);
        CHECK(idx == n);
        CHECK(std::abs(re - double(n * n)) < 1e-11);
    }
}

TEST_CASE("charfn grid export: unperturbed j=1 totals equal cos(pi sqrt(lambda))") {
    Sandbox box;
    write_zero_problem(box.path("zero.json"));
    const int rc = run_cli("charfn --problem " + box.path("zero.json") +
                           " --j 1 --grid 0:0.1:30 --out " + box.path("grid.csv"));
    REQUIRE(rc == 0);
    const auto lines = lines_of(slurp(box.path("grid.csv")));
    REQUIRE(lines.size() >= 300);
    for (std::size_t i = 1; i < lines.size(); i += 37) {
        double lam_re, lam_im, tot_re;
        std::sscanf(lines[i].c_str(), "%lf,%lf,%lf", &lam_re, &lam_im, &tot_re);
        CHECK(std::abs(tot_re - std::cos(kPi * std::sqrt(lam_re))) < 1e-12);
    }
}

TEST_CASE("nonuniq-demo emits coincident pairs, exports match after rounding") {
    Sandbox box;
    const BumpSpec bump{FunctionRep::indicator(0.0, kPi / 4.0), kPi / 4.0};
    write_file_atomic(box.path("box.json"), to_json(bump).dump());
    const int rc = run_cli("nonuniq-demo --a 0.7853981633974483 --b 1.5707963267948966 --bump " +
                           box.path("box.json") + " --out-dir " + box.dir.string() +
                           " --grid -5:8.3:400");
    REQUIRE(rc == 0);
    const Json report = Json::parse(slurp(box.path("coincidence.json")));
    CHECK(report.at("max_delta_discrepancy").get<double>() <= 1e-10);
    CHECK(report.at("max_eigenvalue_diff").get<double>() <= 1e-8);

    // exported characteristic grids of the two pairs agree to 10 significant digits
    for (const int j : {0, 1}) {
        for (const int pair : {1, 2}) {
            const int rc2 = run_cli("charfn --problem " + box.path("pair" + std::to_string(pair) + ".json") +
                                    " --j " + std::to_string(j) + " --grid 0:1.7:400 --out " +
                                    box.path("g" + std::to_string(pair) + ".csv"));
            REQUIRE(rc2 == 0);
        }
        const auto g1 = lines_of(slurp(box.path("g1.csv")));
        const auto g2 = lines_of(slurp(box.path("g2.csv")));
        REQUIRE(g1.size() == g2.size());
        for (std::size_t i = 1; i < g1.size(); ++i) {
            double l1, i1, t1, l2, i2, t2;
            std::sscanf(g1[i].c_str(), "%lf,%lf,%lf", &l1, &i1, &t1);
            std::sscanf(g2[i].c_str(), "%lf,%lf,%lf", &l2, &i2, &t2);
            char b1[64], b2[64];
            std::snprintf(b1, sizeof(b1), "%.10g", t1);
            std::snprintf(b2, sizeof(b2), "%.10g", t2);
            CHECK(std::string(b1) == std::string(b2));
        }
    }
}

TEST_CASE("charfn on the imaginary-axis ray: exponential envelope growth") {
    Sandbox box;
    write_zero_problem(box.path("zero.json"));
    const int rc = run_cli("charfn --problem " + box.path("zero.json") +
                           " --j 0 --grid 1:4:200 --arg 1.5707963267948966 --out " +
                           box.path("ray.csv"));
    REQUIRE(rc == 0);
    const auto lines = lines_of(slurp(box.path("ray.csv")));
    REQUIRE(lines.size() > 20);
    double prev = 0.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        double lr, li, tr, ti;
        std::sscanf(lines[i].c_str(), "%lf,%lf,%lf,%lf", &lr, &li, &tr, &ti);
        const double mag = std::hypot(tr, ti);
        const double r = std::hypot(lr, li);
        if (r > 20.0) CHECK(mag > prev); // monotone envelope once e^(pi Im rho) dominates
        prev = mag;
        // stays within a loose band of the predicted envelope
        const double envelope = std::exp(kPi * std::sqrt(r / 2.0)) / std::sqrt(r);
        if (r > 20.0) {
            CHECK(mag < 5.0 * envelope);
            CHECK(mag > 0.05 * envelope);
        }
    }
}

TEST_CASE("charfn json format carries all four parts") {
    Sandbox box;
    write_zero_problem(box.path("zero.json"));
    REQUIRE(run_cli("charfn --problem " + box.path("zero.json") +
                    " --j 1 --grid 1:5:20 --format json --out " + box.path("c.json")) == 0);
    const Json arr = Json::parse(slurp(box.path("c.json")));
    REQUIRE(arr.is_array());
    CHECK(arr[0].contains("phi_pi"));
    CHECK(arr[0].contains("a0"));
    CHECK(arr[0].contains("a1"));
    CHECK(arr[0].contains("b"));
    CHECK(arr[0].contains("total"));
}

TEST_CASE("runs are deterministic: identical bytes on repeat") {
    Sandbox box;
    write_zero_problem(box.path("zero.json"));
    REQUIRE(run_cli("trace --problem " + box.path("zero.json") + " --j 0 --n 15 --out " +
                    box.path("t1.csv")) == 0);
    REQUIRE(run_cli("trace --problem " + box.path("zero.json") + " --j 0 --n 15 --out " +
                    box.path("t2.csv")) == 0);
    CHECK(slurp(box.path("t1.csv")) == slurp(box.path("t2.csv")));
}

TEST_CASE("reconstruct: spectra of a right-supported fixture round-trip through files") {
    Sandbox box;
    const Problem prob = fixtures::right_supported_smooth();
    LocateOptions opts;
    opts.certify = false;
    const Spectrum s0 = locate_eigenvalues(prob, 0, 60, opts);
    const Spectrum s1 = locate_eigenvalues(prob, 1, 60, opts);
    write_file_atomic(box.path("pair.json"),
                      Json{{"spec0", to_json(s0)}, {"spec1", to_json(s1)}}.dump());
    const int rc = run_cli("reconstruct --spectra " + box.path("pair.json") +
                           " --a 1.0 --b 1.8 --m 45 --out " + box.path("rec.json"));
    REQUIRE(rc == 0);
    const Json out = Json::parse(slurp(box.path("rec.json")));
    const Problem rec = problem_from_json(out.at("problem"));
    CHECK(l2_distance(rec.p, prob.p) / l2_norm(prob.p) < 2e-2);
    CHECK(out.at("diagnostics").at("window_count").get<int>() == 2);
}

TEST_CASE("thread cap does not change any output byte") {
    Sandbox box;
    write_zero_problem(box.path("zero.json"));
    const std::string base = "spectrum --problem " + box.path("zero.json") + " --j 1 --n 40 --out ";
    const std::string c1 = "FROZEN_SPECTRA_THREADS=1 " + std::string(FROSPEC_CLI_PATH) + " " +
                           base + box.path("s1.csv") + " >/dev/null 2>&1";
    const std::string c8 = "FROZEN_SPECTRA_THREADS=8 " + std::string(FROSPEC_CLI_PATH) + " " +
                           base + box.path("s8.csv") + " >/dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(c1.c_str())) == 0);
    REQUIRE(WEXITSTATUS(std::system(c8.c_str())) == 0);
    CHECK(slurp(box.path("s1.csv")) == slurp(box.path("s8.csv")));
}

TEST_CASE("reconstruct flags support-condition violations as domain errors") {
    Sandbox box;
    // spectra of a problem whose coefficients do NOT vanish on [0, b]: the
    // recovered data function g0 cannot vanish there, which the CLI reports
    // with exit code 1
    const auto demo = fixtures::confusable_demo();
    LocateOptions opts;
    opts.certify = false;
    const Spectrum s0 = locate_eigenvalues(demo.pair1, 0, 60, opts);
    const Spectrum s1 = locate_eigenvalues(demo.pair1, 1, 60, opts);
    write_file_atomic(box.path("pair.json"),
                      Json{{"spec0", to_json(s0)}, {"spec1", to_json(s1)}}.dump());
    const int rc = run_cli("reconstruct --spectra " + box.path("pair.json") +
                           " --a 0.7853981633974483 --b 1.5707963267948966 --m 40 --out " +
                           box.path("rec.json"));
    CHECK(rc == 1);
}

TEST_CASE("exit codes: usage errors give 2, verify failures give 1") {
    Sandbox box;
    // malformed JSON
    write_file_atomic(box.path("bad.json"), "{ not json");
    CHECK(run_cli("spectrum --problem " + box.path("bad.json") + " --j 0 --n 5") == 2);
    // missing input file
    CHECK(run_cli("spectrum --problem " + box.path("absent.json") + " --j 0 --n 5") == 2);
    // missing required flag
    CHECK(run_cli("spectrum --j 0") == 2);
    // out-of-range knob
    write_zero_problem(box.path("zero.json"));
    CHECK(run_cli("spectrum --problem " + box.path("zero.json") + " --j 0 --n 90000") == 2);
    // unknown verify suite
    CHECK(run_cli("verify --suite nonsense") == 2);
    // fast verify suite succeeds
    CHECK(run_cli("verify --suite serialization") == 0);
}

TEST_SUITE_END();
