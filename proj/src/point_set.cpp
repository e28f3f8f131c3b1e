#include "aperiodica/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <stdexcept>

#include "aperiodica/numerics.hpp"

namespace aperiodica {

namespace {

bool lex_less(std::span<const double> a, std::span<const double> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

double max_norm_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

}  // namespace

SupportedFunction indicator_box(std::vector<double> lo, std::vector<double> hi) {
    SupportedFunction s;
    s.support_lo = lo;
    s.support_hi = hi;
    s.f = [lo = std::move(lo), hi = std::move(hi)](std::span<const double> x) {
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] < lo[j] || x[j] >= hi[j]) return 0.0;
        return 1.0;
    };
    return s;
}

bool in_window(std::span<const double> x, double radius) {
    const double h = radius / 2.0;
    for (double v : x)
        if (v < -h || v >= h) return false;
    return true;
}

ColoredPointSet make_point_set(int dimension, int num_colors, double separation,
                               double window_radius,
                               std::vector<ColoredPoint> points,
                               std::vector<std::array<std::int64_t, 2>> lattice) {
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    if (num_colors < 1) throw std::invalid_argument("num_colors must be >= 1");
    if (!(separation > 0.0)) throw std::invalid_argument("separation must be > 0");
    if (window_radius < 0.0) throw std::invalid_argument("window radius must be >= 0");
    if (!lattice.empty() && lattice.size() != points.size())
        throw std::invalid_argument("lattice coordinate count mismatch");

    const std::size_t n = points.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lex_less(points[a].position, points[b].position);
    });

    ColoredPointSet set;
    set.dimension = dimension;
    set.num_colors = num_colors;
    set.separation = separation;
    set.window_radius = window_radius;
    set.coords.reserve(n * dimension);
    set.colors.reserve(n);
    if (!lattice.empty()) set.lattice.reserve(n);

    for (std::size_t idx : order) {
        const auto& p = points[idx];
        if (static_cast<int>(p.position.size()) != dimension)
            throw std::invalid_argument("point dimension mismatch");
        for (double v : p.position)
            if (!std::isfinite(v))
                throw std::invalid_argument("position coordinates must be finite");
        if (p.color < 1 || p.color > num_colors)
            throw std::invalid_argument("color out of range 1..m");
        if (!in_window(p.position, window_radius))
            throw std::invalid_argument("position outside window");
        set.coords.insert(set.coords.end(), p.position.begin(), p.position.end());
        set.colors.push_back(p.color);
        if (!lattice.empty()) set.lattice.push_back(lattice[idx]);
    }

    for (std::size_t i = 1; i < n; ++i) {
        auto prev = set.position(i - 1);
        auto cur = set.position(i);
        if (!lex_less(prev, cur))
            throw std::invalid_argument("duplicate position in point set");
    }
    return set;
}

bool validate_uniform_discreteness(const ColoredPointSet& points) {
    const std::size_t n = points.size();
    const double r = points.separation;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        auto xi = points.position(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            auto xj = points.position(j);
            if (xj[0] - xi[0] >= r) break;  // sorted leading coordinate
            if (max_norm_diff(xi, xj) < r) return false;
        }
    }
    return true;
}

double count(const ColoredPointSet& points, const SupportedFunction& f,
             const WeightSystem& w) {
    check_weights(points, w);
    if (static_cast<int>(f.support_lo.size()) != points.dimension ||
        static_cast<int>(f.support_hi.size()) != points.dimension)
        throw std::invalid_argument("support dimension mismatch");
    const double h = points.window_radius / 2.0;
    for (int j = 0; j < points.dimension; ++j) {
        if (f.support_lo[j] < -h || f.support_hi[j] > h)
            throw std::invalid_argument("window underflow");
    }

    KahanSum sum;
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto x = points.position(i);
        bool inside = true;
        for (int j = 0; j < points.dimension; ++j) {
            if (x[j] < f.support_lo[j] || x[j] >= f.support_hi[j]) {
                inside = false;
                break;
            }
        }
        if (!inside) continue;
        sum.add(w[points.colors[i]] * f.f(x));
    }
    return sum.value();
}

ColoredPointSet restrict_color(const ColoredPointSet& points, int color) {
    if (color < 1 || color > points.num_colors)
        throw std::invalid_argument("color out of range 1..m");
    ColoredPointSet out;
    out.dimension = points.dimension;
    out.num_colors = 1;
    out.separation = points.separation;
    out.window_radius = points.window_radius;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points.colors[i] != color) continue;
        auto x = points.position(i);
        out.coords.insert(out.coords.end(), x.begin(), x.end());
        out.colors.push_back(1);
        if (points.has_lattice_coords()) out.lattice.push_back(points.lattice[i]);
    }
    return out;
}

ColoredPointSet flatten(const ColoredPointSet& points) {
    ColoredPointSet out;
    out.dimension = points.dimension;
    out.num_colors = 1;
    out.separation = points.separation;
    out.window_radius = points.window_radius;
    out.coords = points.coords;
    out.colors.assign(points.size(), 1);
    out.lattice = points.lattice;
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (max_norm_diff(out.position(i - 1), out.position(i)) == 0.0)
            throw std::invalid_argument("coincident positions of distinct colors");
    }
    return out;
}

IntensityReport empirical_intensity(const ColoredPointSet& points,
                                    const WeightSystem& w) {
    check_weights(points, w);
    if (!(points.window_radius > 0.0))
        throw std::invalid_argument("window radius must be positive");
    IntensityReport rep;
    rep.radius_used = points.window_radius;
    rep.per_color.assign(points.num_colors, 0.0);
    std::vector<std::int64_t> counts(points.num_colors, 0);
    for (int c : points.colors) counts[c - 1] += 1;
    const double vol = std::pow(points.window_radius, points.dimension);
    double weighted = 0.0;
    for (int i = 0; i < points.num_colors; ++i) {
        rep.per_color[i] = static_cast<double>(counts[i]) / vol;
        weighted += w.weights[i] * rep.per_color[i];
    }
    rep.weighted = weighted;
    return rep;
}

ColoredPointSet restrict_window(const ColoredPointSet& points, double radius) {
    if (radius < 0.0 || radius > points.window_radius)
        throw std::invalid_argument("restricted window must shrink");
    ColoredPointSet out;
    out.dimension = points.dimension;
    out.num_colors = points.num_colors;
    out.separation = points.separation;
    out.window_radius = radius;
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto x = points.position(i);
        if (!in_window(x, radius)) continue;
        out.coords.insert(out.coords.end(), x.begin(), x.end());
        out.colors.push_back(points.colors[i]);
        if (points.has_lattice_coords()) out.lattice.push_back(points.lattice[i]);
    }
    return out;
}

ColoredPointSet translate(const ColoredPointSet& points,
                          std::span<const double> t) {
    if (static_cast<int>(t.size()) != points.dimension)
        throw std::invalid_argument("translation dimension mismatch");
    double shift = 0.0;
    for (double v : t) shift = std::max(shift, std::abs(v));
    ColoredPointSet out;
    out.dimension = points.dimension;
    out.num_colors = points.num_colors;
    out.separation = points.separation;
    out.window_radius = std::max(0.0, points.window_radius - 2.0 * shift);
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto x = points.position(i);
        std::vector<double> y(x.begin(), x.end());
        for (int j = 0; j < points.dimension; ++j) y[j] += t[j];
        if (!in_window(y, out.window_radius)) continue;
        out.coords.insert(out.coords.end(), y.begin(), y.end());
        out.colors.push_back(points.colors[i]);
        if (points.has_lattice_coords()) out.lattice.push_back(points.lattice[i]);
    }
    return out;
}

std::size_t lower_bound_first_coord(const ColoredPointSet& points, double x0,
                                    double tol) {
    const std::size_t n = points.size();
    const int d = points.dimension;
    std::size_t lo = 0, hi = n;
    const double target = x0 - tol;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (points.coords[mid * d] < target)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

std::optional<std::size_t> find_position(const ColoredPointSet& points,
                                         std::span<const double> x,
                                         double tol) {
    const std::size_t n = points.size();
    for (std::size_t i = lower_bound_first_coord(points, x[0], tol); i < n; ++i) {
        auto p = points.position(i);
        if (p[0] > x[0] + tol) break;
        if (max_norm_diff(p, x) <= tol) return i;
    }
    return std::nullopt;
}

std::uint64_t fingerprint(const ColoredPointSet& points) {
    // FNV-1a over the defining fields.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const void* data, std::size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
    };
    mix(&points.dimension, sizeof points.dimension);
    mix(&points.num_colors, sizeof points.num_colors);
    mix(&points.window_radius, sizeof points.window_radius);
    if (!points.coords.empty())
        mix(points.coords.data(), points.coords.size() * sizeof(double));
    if (!points.colors.empty())
        mix(points.colors.data(), points.colors.size() * sizeof(int));
    return h;
}

void check_weights(const ColoredPointSet& points, const WeightSystem& w) {
    if (w.size() != points.num_colors)
        throw std::invalid_argument("weight system length must equal num_colors");
}

}  // namespace aperiodica
