#pragma once

namespace aperiodica {

/// Resolves the worker count for parallel kernels.
/// Priority: explicit request > APERIODICA_THREADS env var > OpenMP default.
/// A request of 0 means "not specified".
int resolve_threads(int requested = 0);

}  // namespace aperiodica
