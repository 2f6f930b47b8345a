#pragma once

#include "frospec/characteristic.hpp"
#include "frospec/inverse.hpp"
#include "frospec/isospectral.hpp"
#include "frospec/spectrum.hpp"
#include "frospec/traces.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace frospec {

using Json = nlohmann::json;

// Complex values are serialized as [re, im]; angles and positions are
// radians stored as plain doubles (pi appears as its closest double).

Json to_json(const FunctionRep& f);
FunctionRep function_rep_from_json(const Json& j);

Json to_json(const Problem& prob);
Problem problem_from_json(const Json& j);

/// Spectrum <-> JSON array of {n, lambda: [re, im], kappa: [re, im], residual}.
Json to_json(const Spectrum& spec);
Spectrum spectrum_from_json(const Json& j, int family);

Json to_json(const CharEval& e);

Json to_json(const BumpSpec& bump);
BumpSpec bump_from_json(const Json& j);

Json to_json(const ReconstructionResult& r);

/// CSV with columns n,re,im,kappa_re,kappa_im.
std::string spectrum_to_csv(const Spectrum& spec);

/// CSV with columns n,a_re,a_im,b_re,b_im,s_re,s_im,
/// eig_partial_re,eig_partial_im,coeff_partial_re,coeff_partial_im.
std::string trace_rows_to_csv(const std::vector<TraceRow>& rows);

/// CSV of characteristic-function samples: lambda_re,lambda_im and the four
/// parts plus the total, one row per grid point.
std::string char_grid_to_csv(const std::vector<CharEval>& rows);

/// Writes via a temp file in the same directory followed by a rename.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

} // namespace frospec
