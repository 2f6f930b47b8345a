#pragma once

#include "frospec/spectrum.hpp"

#include <map>
#include <string>

namespace frospec {

/// The data of the inverse problem: both spectra, certified through a common
/// length N with contiguous indices 1..N.
struct SpectraPair {
    Spectrum spec0;
    Spectrum spec1;
    int N = 0;

    SpectraPair(Spectrum s0, Spectrum s1);
};

struct ReconstructionResult {
    FunctionRep p, q;
    int M = 0;             ///< Fourier truncation order used for W recovery
    int window_count = 0;  ///< smallest n with b + n(b-a) >= pi
    std::map<std::string, double> residuals;
};

struct StaircaseOptions {
    /// Mesh width for projecting the recovered functions onto piecewise
    /// cubics; ignored (no subdivision) when both inputs are piecewise
    /// polynomial, where the staircase is exact.
    double max_piece_len = 2e-3;
    int max_windows = 10000;
};

/// Characteristic function rebuilt from one spectrum via the spectral
/// product: phi_j(rho, pi) * prod_{n<=N} (lambda_n - lambda)/((n-j/2)^2 - lambda).
/// The tail n > N is the exact unperturbed product absorbed into phi_j.
/// When lambda falls on (or near) an unperturbed grid point with n <= N, the
/// offending denominator is cancelled against the matching zero of phi_j in
/// closed form, so sampling exactly at m^2 resp. (m-1/2)^2 is stable.
Complex delta_from_spectrum(int j, const Spectrum& spec, Complex lambda);

/// A_j(lambda) = Delta_j(lambda) - phi_j(rho, pi), valid when the support
/// condition kills the bilinear term.
Complex recover_A(int j, const Spectrum& spec, Complex lambda);

/// Recovers W_j from spectral samples of A_j at the unperturbed grid:
/// j = 0: cosine series with coefficients from 2 m^2 A_0(m^2), zero mean;
/// j = 1: half-sine series with coefficients from 2 (m-1/2) A_1((m-1/2)^2).
FunctionRep recover_W(int j, const Spectrum& spec, int M);

/// Window-by-window recovery of (p, q), zero on [0, b], from the kernel
/// densities: u0, u1 are formed from W0, W1, the data functions g0, g1 are
/// assembled by shift/reflection, and each window of width b-a is solved
/// from the previous one. Exact (machine precision) when W0, W1 are
/// piecewise polynomial.
ReconstructionResult staircase_solve(const FunctionRep& w0, const FunctionRep& w1,
                                     double a, double b, const StaircaseOptions& opts = {});

/// Full pipeline: recover_W for both families, then the staircase.
ReconstructionResult reconstruct(const SpectraPair& pair, double a, double b, int M,
                                 const StaircaseOptions& opts = {});

} // namespace frospec
