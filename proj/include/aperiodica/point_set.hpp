#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aperiodica {

/// A single colored point: position in R^d plus a color in 1..m.
struct ColoredPoint {
    std::vector<double> position;
    int color = 1;
};

/// Finite realization of a colored, uniformly discrete point set inside the
/// centered cube of edge R. Window membership is [-R/2, R/2) per axis, so a
/// generated region tiles exactly when windows are abutted. Positions are
/// stored flat (count * dimension) in strict lexicographic order.
///
/// Cut-and-project constructions additionally carry the exact integer lattice
/// coordinates of each point, so displacement matching for those sets never
/// relies on floating-point equality.
struct ColoredPointSet {
    int dimension = 1;
    int num_colors = 1;
    double separation = 1.0;     // hard-core distance r (max-norm)
    double window_radius = 0.0;  // cube edge R
    std::vector<double> coords;  // size count*dimension, lex sorted
    std::vector<int> colors;     // size count
    std::vector<std::array<std::int64_t, 2>> lattice;  // empty or size count

    std::size_t size() const { return colors.size(); }
    bool empty() const { return colors.empty(); }
    bool has_lattice_coords() const { return !lattice.empty(); }

    std::span<const double> position(std::size_t i) const {
        return {coords.data() + i * static_cast<std::size_t>(dimension),
                static_cast<std::size_t>(dimension)};
    }
    ColoredPoint point(std::size_t i) const {
        auto p = position(i);
        return {{p.begin(), p.end()}, colors[i]};
    }
};

/// Scattering weight per color. Enters correlations only, never geometry.
struct WeightSystem {
    std::vector<double> weights;

    int size() const { return static_cast<int>(weights.size()); }
    double operator[](int color) const { return weights[color - 1]; }
};

/// Per-color and weighted point densities over the realized window.
struct IntensityReport {
    std::vector<double> per_color;  // points per unit volume, by color
    double weighted = 0.0;
    double radius_used = 0.0;
};

/// A bounded function together with its (half-open box) support.
struct SupportedFunction {
    std::function<double(std::span<const double>)> f;
    std::vector<double> support_lo;
    std::vector<double> support_hi;
};

/// Indicator of the half-open box [lo, hi).
SupportedFunction indicator_box(std::vector<double> lo, std::vector<double> hi);

bool in_window(std::span<const double> x, double radius);

/// Validating constructor; sorts points, checks invariants, throws on
/// violation. Uniform discreteness is not enforced here (it is a predicate,
/// see validate_uniform_discreteness).
ColoredPointSet make_point_set(int dimension, int num_colors, double separation,
                               double window_radius,
                               std::vector<ColoredPoint> points,
                               std::vector<std::array<std::int64_t, 2>> lattice = {});

/// True iff no open cube of edge r holds two points, i.e. all pairwise
/// max-norm distances are >= r.
bool validate_uniform_discreteness(const ColoredPointSet& points);

/// N^w_f: sum of w(color) * f(position) over the set. The support of f must
/// lie inside the realized window, otherwise the result would be truncated.
double count(const ColoredPointSet& points, const SupportedFunction& f,
             const WeightSystem& w);

/// Points of one color only, renumbered to a single-color set.
ColoredPointSet restrict_color(const ColoredPointSet& points, int color);

/// Union of positions with color information dropped. Throws if two colors
/// share a position (excluded by uniform discreteness).
ColoredPointSet flatten(const ColoredPointSet& points);

IntensityReport empirical_intensity(const ColoredPointSet& points,
                                    const WeightSystem& w);

/// The same set restricted to the smaller window [-R'/2, R'/2).
ColoredPointSet restrict_window(const ColoredPointSet& points, double radius);

/// All positions shifted by t; the window shrinks so shifted points stay
/// inside a centered cube.
ColoredPointSet translate(const ColoredPointSet& points,
                          std::span<const double> t);

/// Index of the point at position x within the matching tolerance, if any.
std::optional<std::size_t> find_position(const ColoredPointSet& points,
                                         std::span<const double> x,
                                         double tol = 1e-9);

/// First index whose leading coordinate is >= x0 - tol (binary search).
std::size_t lower_bound_first_coord(const ColoredPointSet& points, double x0,
                                    double tol = 1e-9);

/// Deterministic content fingerprint (dimensions, window, coordinates,
/// colors). Used to tag derived estimates with their source.
std::uint64_t fingerprint(const ColoredPointSet& points);

void check_weights(const ColoredPointSet& points, const WeightSystem& w);

}  // namespace aperiodica
