#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aperiodica/point_set.hpp"
#include "aperiodica/sequence.hpp"

namespace aperiodica {

/// Finitely supported displacement -> coefficient map eta^w(t), computed over
/// an eroded inner window so every counted point sees its full neighborhood
/// inside the data (unbiased at finite R). Lags are stored flat
/// (count * dimension), lexicographically sorted and closed under negation
/// with eta(-t) = eta(t) by construction.
struct AutocorrelationMeasure {
    int dimension = 1;
    std::vector<double> lags;    // count * dimension
    std::vector<double> values;  // count
    double radius_used = 0.0;    // R of the source realization
    double inner_radius = 0.0;   // eroded window edge the average ran over
    double max_lag = 0.0;
    WeightSystem weight_system;
    double intensity = 0.0;  // weighted intensity over the inner window
    std::uint64_t source_id = 0;

    std::size_t size() const { return values.size(); }
    std::span<const double> lag(std::size_t i) const {
        return {lags.data() + i * static_cast<std::size_t>(dimension),
                static_cast<std::size_t>(dimension)};
    }
    /// Coefficient at displacement t within the matching tolerance, if present.
    std::optional<double> value_at(std::span<const double> t,
                                   double tol = 1e-9) const;
    double value_at_or_zero(std::span<const double> t, double tol = 1e-9) const {
        return value_at(t, tol).value_or(0.0);
    }
    /// eta(0); zero if the support is empty.
    double at_zero() const;
};

/// Values of the (order+1)-point correlation at requested displacement tuples.
struct CorrelationTensor {
    int order = 1;  // n, so entries come from the (n+1)-point correlation
    int dimension = 1;
    std::vector<std::vector<double>> tuples;  // each order * dimension
    std::vector<double> values;
    double radius_used = 0.0;
    double inner_radius = 0.0;
    WeightSystem weight_system;
    std::uint64_t source_id = 0;
};

/// A finite anchored motif: colored offsets (one of which is the origin)
/// matched inside a cube of half-edge epsilon, open or closed.
struct Pattern {
    std::vector<ColoredPoint> anchor;  // F; 0 must lie in its flattening
    double epsilon = 0.0;              // half-edge of the matching cube V
    bool closed = false;
};

/// Weight-independent half of the autocorrelation: integer pair counts per
/// (displacement cluster, color pair) over the eroded inner window, for
/// canonical (lexicographically nonnegative) displacements. Counts merge
/// exactly, so the parallel result is bit-identical to the serial one.
struct DisplacementCounts {
    int dimension = 1;
    int num_colors = 1;
    std::vector<double> reps;          // n_clusters * dimension, lex sorted
    std::vector<std::int64_t> counts;  // n_clusters * m * m, row-major
    std::vector<std::int64_t> color_counts;  // inner-window points per color
    double radius_used = 0.0;
    double inner_radius = 0.0;
    double max_lag = 0.0;
    std::uint64_t source_id = 0;

    int clusters() const {
        return dimension == 0 ? 0 : static_cast<int>(reps.size()) / dimension;
    }
};

DisplacementCounts displacement_counts(const ColoredPointSet& points,
                                       double max_lag, int threads = 0);

/// Applies a weight system to pair counts:
///   eta^w(t) = (1/vol) * sum over color pairs of w_i w_j count_ij(t),
/// mirrored to negative displacements.
AutocorrelationMeasure weigh_displacements(const DisplacementCounts& counts,
                                           const WeightSystem& w);

/// Weighted autocorrelation of a finite realization. For every displacement t
/// with |t|_inf <= max_lag occurring between points,
///   eta^w(t) = (1/vol) * sum over x in the inner window of w(x) w(x + t),
/// where the inner window is eroded by max_lag per axis. Displacements are
/// clustered with the matching tolerance; sets carrying exact lattice
/// coordinates are clustered by integer coordinate differences instead.
AutocorrelationMeasure autocorrelation(const ColoredPointSet& points,
                                       const WeightSystem& w, double max_lag,
                                       int threads = 0);

/// Integer-lag autocorrelation of a symbol window:
///   eta^w(k) = (1/terms) * sum_i w(z_i) w(z_{i+k})
/// over the available index range (per-lag term count normalization).
AutocorrelationMeasure sequence_autocorrelation(const SequenceWindow& seq,
                                                const WeightSystem& w,
                                                std::int64_t max_k,
                                                int threads = 0);

/// (n+1)-point correlation at the given displacement tuples:
///   entry(t_1..t_n) = (1/vol) * sum_x w(x) * prod_i w(x + t_i),
/// with the same inner-window convention as the autocorrelation. If
/// erosion > 0 it overrides the erosion depth derived from the tuples
/// (so entries can share the window of a previously computed measure).
CorrelationTensor npoint_correlation(const ColoredPointSet& points,
                                     const WeightSystem& w,
                                     const std::vector<std::vector<double>>& tuples,
                                     int order, int threads = 0,
                                     double erosion = 0.0);

/// Density of flattened points x such that every (f, c) in the pattern anchor
/// has a matching point of color c within the epsilon-cube around x + f.
double pattern_frequency(const ColoredPointSet& points, const Pattern& pattern,
                         int threads = 0);

/// Solves sum_k w_k^j c_k = diagonal_moments[j-1] for j = 1..m by Gaussian
/// elimination with partial pivoting. Weights must be pairwise distinct and
/// nonzero.
std::vector<double> solve_color_intensities(
    const std::vector<double>& diagonal_moments, const WeightSystem& w);

/// Forward companion of solve_color_intensities: d_j = sum_k w_k^j c_k.
std::vector<double> diagonal_moments_from(const std::vector<double>& c,
                                          const WeightSystem& w);

}  // namespace aperiodica
