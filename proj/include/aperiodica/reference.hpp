#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "aperiodica/correlations.hpp"
#include "aperiodica/point_set.hpp"
#include "aperiodica/sequence.hpp"

namespace aperiodica::reference {

/// Straightforward single-threaded implementations of the heavy kernels.
/// They share no accumulation strategy with the OpenMP versions and exist
/// as an independent check (and as the baseline in the benchmark tool).

/// Displacement -> coefficient over the eroded window, naive accumulation.
/// Keys are displacements quantized at the matching tolerance.
std::map<std::int64_t, double> autocorrelation_1d(const ColoredPointSet& points,
                                                  const WeightSystem& w,
                                                  double max_lag);

std::complex<double> exponential_sum(const ColoredPointSet& points,
                                     const WeightSystem& w,
                                     const std::vector<double>& k);

double sequence_eta(const SequenceWindow& seq, const WeightSystem& w,
                    std::int64_t k);

double npoint_value(const ColoredPointSet& points, const WeightSystem& w,
                    const std::vector<double>& tuple, int order,
                    double erosion);

double pattern_frequency(const ColoredPointSet& points, const Pattern& pattern);

}  // namespace aperiodica::reference
