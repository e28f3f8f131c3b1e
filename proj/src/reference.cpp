#include "aperiodica/reference.hpp"

#include <cmath>
#include <stdexcept>

#include "aperiodica/numerics.hpp"

namespace aperiodica::reference {

std::map<std::int64_t, double> autocorrelation_1d(const ColoredPointSet& points,
                                                  const WeightSystem& w,
                                                  double max_lag) {
    if (points.dimension != 1)
        throw std::invalid_argument("reference kernel is one-dimensional");
    if (!(2.0 * max_lag < points.window_radius))
        throw std::invalid_argument("lag exceeds window");
    const double inner = points.window_radius - 2.0 * max_lag;
    const double vol = inner;
    std::map<std::int64_t, double> sums;
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = points.coords[i];
        if (!(xi >= -inner / 2.0 && xi < inner / 2.0)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const double t = points.coords[j] - xi;
            if (std::abs(t) > max_lag) continue;
            sums[quantize(t)] +=
                w[points.colors[i]] * w[points.colors[j]];
        }
    }
    for (auto& [cell, v] : sums) v /= vol;
    return sums;
}

std::complex<double> exponential_sum(const ColoredPointSet& points,
                                     const WeightSystem& w,
                                     const std::vector<double>& k) {
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto x = points.position(i);
        double phase = 0.0;
        for (int a = 0; a < points.dimension; ++a) phase += k[a] * x[a];
        sum += w[points.colors[i]] * unit_phase(phase);
    }
    return sum / std::pow(points.window_radius, points.dimension);
}

double sequence_eta(const SequenceWindow& seq, const WeightSystem& w,
                    std::int64_t k) {
    const std::int64_t terms = seq.size() - k;
    if (terms <= 0) throw std::invalid_argument("lag exceeds sequence window");
    double sum = 0.0;
    for (std::int64_t i = 0; i < terms; ++i)
        sum += w.weights[seq.symbols[static_cast<std::size_t>(i)] - 1] *
               w.weights[seq.symbols[static_cast<std::size_t>(i + k)] - 1];
    return sum / static_cast<double>(terms);
}

double npoint_value(const ColoredPointSet& points, const WeightSystem& w,
                    const std::vector<double>& tuple, int order,
                    double erosion) {
    const int d = points.dimension;
    const double inner = points.window_radius - 2.0 * erosion;
    double sum = 0.0;
    std::vector<double> target(d);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto x = points.position(i);
        if (!in_window(x, inner)) continue;
        double prod = w[points.colors[i]];
        bool complete = true;
        for (int level = 0; level < order && complete; ++level) {
            for (int a = 0; a < d; ++a) target[a] = x[a] + tuple[level * d + a];
            const auto hit = find_position(points, target);
            if (!hit)
                complete = false;
            else
                prod *= w[points.colors[*hit]];
        }
        if (complete) sum += prod;
    }
    return sum / std::pow(inner, d);
}

double pattern_frequency(const ColoredPointSet& points, const Pattern& pattern) {
    const int d = points.dimension;
    double extent = 0.0;
    for (const auto& f : pattern.anchor) {
        double norm = 0.0;
        for (double v : f.position) norm = std::max(norm, std::abs(v));
        extent = std::max(extent, norm);
    }
    const double inner = points.window_radius - 2.0 * (extent + pattern.epsilon);
    std::int64_t matched = 0;
    std::vector<double> target(d);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto x = points.position(i);
        if (!in_window(x, inner)) continue;
        bool all = true;
        for (const auto& f : pattern.anchor) {
            for (int a = 0; a < d; ++a) target[a] = x[a] + f.position[a];
            bool found = false;
            for (std::size_t j = 0; j < points.size() && !found; ++j) {
                if (points.colors[j] != f.color) continue;
                const auto y = points.position(j);
                double norm = 0.0;
                for (int a = 0; a < d; ++a)
                    norm = std::max(norm, std::abs(y[a] - target[a]));
                found = pattern.closed ? norm <= pattern.epsilon
                                       : norm < pattern.epsilon;
            }
            if (!found) {
                all = false;
                break;
            }
        }
        if (all) matched += 1;
    }
    return static_cast<double>(matched) / std::pow(inner, d);
}

}  // namespace aperiodica::reference
