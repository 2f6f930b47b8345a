#pragma once

#include "frospec/isospectral.hpp"
#include "frospec/problem.hpp"

namespace frospec::fixtures {

/// The bundled iso-spectral demo: a = pi/4, b = pi/2 with a box profile of
/// half-width pi/4. pair1 = (indicator of [0,pi/2], chi_{[pi/4,3pi/4]} - chi_{[0,pi/2]}),
/// pair2 = (-chi_{[pi/4,3pi/4]} + chi_{[0,pi/2]}, chi_{[pi/4,3pi/4]}).
struct ConfusableDemo {
    double a, b;
    BumpSpec bump;
    FunctionRep s, r;
    Problem pair1, pair2;
};
ConfusableDemo confusable_demo();

/// Independent transcription of the closed-form characteristic functions of
/// the demo pair, expressed through the same small-lambda series policy as
/// the assembled evaluation so the comparison stays meaningful near rho = 0.
Complex confusable_demo_delta(int j, Complex lambda);

/// p = sin t, q = cos t, a = 1, b = 2: the smooth trace fixture with limit
/// sin(1) + cos(2).
Problem smooth_trace_problem();

/// a = pi/3, b = pi - a, p the sign-pattern sine series with coefficients
/// sgn(sin(n pi/3))/n truncated at `terms`, q(t) = -p(pi - t). Every s_n0
/// vanishes term by term while sum a_n0 diverges.
Problem sign_series_mirrored(int terms = 60);

/// C^1 two-piece cubic bump on [lo, hi] with peak `amplitude` at the midpoint.
FunctionRep cubic_bump(double lo, double hi, Complex amplitude);

/// Right-supported indicator fixture: a = 1, b = 1.8, p = chi_{[b, b+0.3]},
/// q = 0.5 chi_{[b+0.2, pi]}.
Problem right_supported_box();

/// Right-supported smooth fixtures (both coefficients vanish on [0, b]):
/// narrow: a = 1.0, b = 1.8 (a + b < pi); wide: a = 0.9, b = 2.6 (a + b > pi).
Problem right_supported_smooth();
Problem right_supported_smooth_wide();

} // namespace frospec::fixtures
