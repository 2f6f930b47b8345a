#include "frospec/serialization.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace frospec {

namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw PreconditionError("expected complex value as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::string basis_name(TrigBasis b) {
    switch (b) {
    case TrigBasis::Sine: return "sine";
    case TrigBasis::Cosine: return "cosine";
    case TrigBasis::HalfSine: return "half_sine";
    default: return "half_cosine";
    }
}

TrigBasis basis_from_name(const std::string& name) {
    if (name == "sine") return TrigBasis::Sine;
    if (name == "cosine") return TrigBasis::Cosine;
    if (name == "half_sine") return TrigBasis::HalfSine;
    if (name == "half_cosine") return TrigBasis::HalfCosine;
    throw PreconditionError("unknown trig basis '" + name + "'");
}

/// 17 significant digits: round-trips doubles exactly.
std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

Json to_json(const FunctionRep& f) {
    if (f.is_piecewise()) {
        const auto& p = f.pp();
        Json coeffs = Json::array();
        for (const auto& c : p.coeffs) {
            Json piece = Json::array();
            for (const auto& z : c) piece.push_back(complex_to_json(z));
            coeffs.push_back(std::move(piece));
        }
        return Json{{"type", "piecewise_poly"}, {"breakpoints", p.breakpoints}, {"coeffs", coeffs}};
    }
    const auto& s = f.ts();
    Json coeffs = Json::array();
    for (const auto& z : s.coeffs) coeffs.push_back(complex_to_json(z));
    return Json{{"type", "trig_series"}, {"basis", basis_name(s.basis)}, {"coeffs", coeffs}};
}

FunctionRep function_rep_from_json(const Json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "piecewise_poly") {
        auto breaks = j.at("breakpoints").get<std::vector<double>>();
        std::vector<std::array<Complex, 4>> coeffs;
        for (const auto& piece : j.at("coeffs")) {
            std::array<Complex, 4> c{};
            if (piece.size() > 4) throw PreconditionError("piece degree exceeds 3");
            for (std::size_t k = 0; k < piece.size(); ++k) c[k] = complex_from_json(piece[k]);
            coeffs.push_back(c);
        }
        return FunctionRep::piecewise(std::move(breaks), std::move(coeffs));
    }
    if (type == "trig_series") {
        std::vector<Complex> coeffs;
        for (const auto& z : j.at("coeffs")) coeffs.push_back(complex_from_json(z));
        return FunctionRep::trig(basis_from_name(j.at("basis").get<std::string>()), std::move(coeffs));
    }
    throw PreconditionError("unknown function representation '" + type + "'");
}

Json to_json(const Problem& prob) {
    return Json{{"a", prob.a}, {"b", prob.b}, {"p", to_json(prob.p)}, {"q", to_json(prob.q)}};
}

Problem problem_from_json(const Json& j) {
    return Problem(j.at("a").get<double>(), j.at("b").get<double>(),
                   function_rep_from_json(j.at("p")), function_rep_from_json(j.at("q")));
}

Json to_json(const Spectrum& spec) {
    Json arr = Json::array();
    for (const auto& e : spec.eigenvalues)
        arr.push_back(Json{{"n", e.n},
                           {"lambda", complex_to_json(e.lambda)},
                           {"kappa", complex_to_json(e.kappa)},
                           {"residual", e.residual}});
    return arr;
}

Spectrum spectrum_from_json(const Json& j, int family) {
    if (!j.is_array()) throw PreconditionError("spectrum: expected a JSON array");
    Spectrum spec;
    spec.j = family;
    for (const auto& e : j)
        spec.eigenvalues.push_back({e.at("n").get<int>(), complex_from_json(e.at("lambda")),
                                    complex_from_json(e.at("kappa")),
                                    e.value("residual", 0.0)});
    return spec;
}

Json to_json(const CharEval& e) {
    return Json{{"j", e.j},           {"lambda", complex_to_json(e.lambda)},
                {"phi_pi", complex_to_json(e.phi_pi)}, {"a0", complex_to_json(e.a0)},
                {"a1", complex_to_json(e.a1)},         {"b", complex_to_json(e.b)},
                {"total", complex_to_json(e.total)}};
}

Json to_json(const BumpSpec& bump) {
    return Json{{"T", bump.T}, {"g", to_json(bump.g_half)}};
}

BumpSpec bump_from_json(const Json& j) {
    return BumpSpec{function_rep_from_json(j.at("g")), j.at("T").get<double>()};
}

Json to_json(const ReconstructionResult& r) {
    Json residuals = Json::object();
    for (const auto& [k, v] : r.residuals) residuals[k] = v;
    return Json{{"p", to_json(r.p)},
                {"q", to_json(r.q)},
                {"m", r.M},
                {"window_count", r.window_count},
                {"residuals", residuals}};
}

std::string spectrum_to_csv(const Spectrum& spec) {
    std::ostringstream out;
    out << "n,re,im,kappa_re,kappa_im\n";
    for (const auto& e : spec.eigenvalues)
        out << e.n << ',' << fmt(e.lambda.real()) << ',' << fmt(e.lambda.imag()) << ','
            << fmt(e.kappa.real()) << ',' << fmt(e.kappa.imag()) << '\n';
    return out.str();
}

std::string trace_rows_to_csv(const std::vector<TraceRow>& rows) {
    std::ostringstream out;
    out << "n,a_re,a_im,b_re,b_im,s_re,s_im,eig_partial_re,eig_partial_im,"
           "coeff_partial_re,coeff_partial_im\n";
    for (const auto& r : rows)
        out << r.n << ',' << fmt(r.a.real()) << ',' << fmt(r.a.imag()) << ',' << fmt(r.b.real())
            << ',' << fmt(r.b.imag()) << ',' << fmt(r.s.real()) << ',' << fmt(r.s.imag()) << ','
            << fmt(r.eig_partial.real()) << ',' << fmt(r.eig_partial.imag()) << ','
            << fmt(r.coeff_partial.real()) << ',' << fmt(r.coeff_partial.imag()) << '\n';
    return out.str();
}

std::string char_grid_to_csv(const std::vector<CharEval>& rows) {
    std::ostringstream out;
    out << "lambda_re,lambda_im,total_re,total_im,phi_re,phi_im,a0_re,a0_im,"
           "a1_re,a1_im,b_re,b_im\n";
    for (const auto& e : rows)
        out << fmt(e.lambda.real()) << ',' << fmt(e.lambda.imag()) << ',' << fmt(e.total.real())
            << ',' << fmt(e.total.imag()) << ',' << fmt(e.phi_pi.real()) << ','
            << fmt(e.phi_pi.imag()) << ',' << fmt(e.a0.real()) << ',' << fmt(e.a0.imag()) << ','
            << fmt(e.a1.real()) << ',' << fmt(e.a1.imag()) << ',' << fmt(e.b.real()) << ','
            << fmt(e.b.imag()) << '\n';
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path dir = target.parent_path().empty() ? fs::path(".") : target.parent_path();
    const fs::path tmp = dir / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.good()) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace frospec
