#pragma once

#include <functional>

namespace frospec::detail {

/// Thread cap: FROZEN_SPECTRA_THREADS if set (>= 1), else hardware concurrency.
int thread_cap();

/// Static-partition parallel loop over [0, n). Results must be written to
/// disjoint slots so the outcome is independent of scheduling.
void parallel_for(int n, const std::function<void(int)>& body);

} // namespace frospec::detail
