#include "aperiodica/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aperiodica {

ColoredPointSet suspend(const SequenceWindow& seq,
                        const std::vector<double>& lengths, double t) {
    if (static_cast<int>(lengths.size()) != seq.num_colors)
        throw std::invalid_argument("one tile length required per color");
    for (double len : lengths)
        if (!(len > 0.0)) throw std::invalid_argument("tile lengths must be positive");
    for (int c : seq.symbols)
        if (c < 1 || c > seq.num_colors)
            throw std::invalid_argument("sequence symbol out of range");

    const std::int64_t lo = seq.first_index;
    const std::int64_t hi = seq.last_index();

    // Cumulative tile boundaries S_n relative to index 0, S_0 = 0.
    // Tiles cover [t + S_lo, t + S_{hi+1}).
    std::vector<double> boundary(static_cast<std::size_t>(seq.size()) + 1);
    std::int64_t zero_pos = std::clamp<std::int64_t>(0, lo, hi + 1) - lo;
    boundary[zero_pos] = 0.0;
    for (std::int64_t n = zero_pos; n + 1 <= seq.size(); ++n)
        boundary[n + 1] = boundary[n] + lengths[seq.symbols[n] - 1];
    for (std::int64_t n = zero_pos; n - 1 >= 0; --n)
        boundary[n - 1] = boundary[n] - lengths[seq.symbols[n - 1] - 1];

    // Tight window (largest centered cube fully covered by tiles) when the
    // tiling straddles the origin; otherwise a containing window so that
    // one-sided ad-hoc sequences keep their points.
    const double cover_lo = t + boundary.front();
    const double cover_hi = t + boundary.back();
    double radius;
    if (cover_lo < 0.0 && cover_hi > 0.0)
        radius = 2.0 * std::min(-cover_lo, cover_hi);
    else
        radius = 2.0 * std::max(std::abs(cover_lo), std::abs(cover_hi));

    const double min_len = *std::min_element(lengths.begin(), lengths.end());

    std::vector<ColoredPoint> pts;
    pts.reserve(seq.symbols.size());
    for (std::int64_t n = 0; n < seq.size(); ++n) {
        const double x = t + boundary[static_cast<std::size_t>(n)];
        if (!in_window(std::span<const double>(&x, 1), radius)) continue;
        pts.push_back({{x}, seq.symbols[static_cast<std::size_t>(n)]});
    }
    return make_point_set(1, seq.num_colors, min_len / 2.0, std::max(radius, 0.0),
                          std::move(pts));
}

void validate_scheme(const CutProjectScheme& scheme) {
    if (std::abs(scheme.determinant()) < 1e-12)
        throw std::invalid_argument("degenerate lattice basis");
    if (!(scheme.window_lo < scheme.window_hi))
        throw std::invalid_argument("window interval must be nonempty");
    if (scheme.scale < 0.0)
        throw std::invalid_argument("window scale must be nonnegative");
}

ColoredPointSet model_set(const CutProjectScheme& scheme, double R) {
    validate_scheme(scheme);
    if (!(R > 0.0)) throw std::invalid_argument("window radius must be positive");

    const double x_lo = -R / 2.0, x_hi = R / 2.0;
    const double y_lo = scheme.scale * scheme.window_lo;
    const double y_hi = scheme.scale * scheme.window_hi;

    // Integer preimage box of the region [x_lo,x_hi) x [y_lo,y_hi):
    // (n, m) = (x, y) B^{-1} for basis rows B.
    const double det = scheme.determinant();
    const double inv[2][2] = {{scheme.basis[1][1] / det, -scheme.basis[0][1] / det},
                              {-scheme.basis[1][0] / det, scheme.basis[0][0] / det}};
    auto pre_n = [&](double x, double y) { return x * inv[0][0] + y * inv[1][0]; };
    auto pre_m = [&](double x, double y) { return x * inv[0][1] + y * inv[1][1]; };

    double n_min = std::numeric_limits<double>::infinity();
    double n_max = -n_min, m_min = n_min, m_max = n_max;
    for (double x : {x_lo, x_hi})
        for (double y : {y_lo, y_hi}) {
            n_min = std::min(n_min, pre_n(x, y));
            n_max = std::max(n_max, pre_n(x, y));
            m_min = std::min(m_min, pre_m(x, y));
            m_max = std::max(m_max, pre_m(x, y));
        }

    std::vector<ColoredPoint> pts;
    std::vector<std::array<std::int64_t, 2>> lat;
    double min_gap = std::numeric_limits<double>::infinity();

    const auto n_first = static_cast<std::int64_t>(std::floor(n_min)) - 1;
    const auto n_last = static_cast<std::int64_t>(std::ceil(n_max)) + 1;
    const double b01 = scheme.basis[0][1], b11 = scheme.basis[1][1];
    const double b00 = scheme.basis[0][0], b10 = scheme.basis[1][0];

    for (std::int64_t n = n_first; n <= n_last; ++n) {
        // Admissible m interval from the internal window, intersected with
        // the physical window and the global preimage box.
        double lo_m = m_min - 1.0, hi_m = m_max + 1.0;
        auto clip = [&](double coeff_n, double coeff_m, double lo, double hi) {
            // lo <= n*coeff_n + m*coeff_m < hi
            if (std::abs(coeff_m) < 1e-300) return;
            const double a = (lo - static_cast<double>(n) * coeff_n) / coeff_m;
            const double b = (hi - static_cast<double>(n) * coeff_n) / coeff_m;
            lo_m = std::max(lo_m, std::min(a, b) - 1.0);
            hi_m = std::min(hi_m, std::max(a, b) + 1.0);
        };
        clip(b01, b11, y_lo, y_hi);
        clip(b00, b10, x_lo, x_hi);
        if (lo_m > hi_m) continue;
        const auto m_first = static_cast<std::int64_t>(std::floor(lo_m));
        const auto m_last = static_cast<std::int64_t>(std::ceil(hi_m));
        for (std::int64_t m = m_first; m <= m_last; ++m) {
            const double y = scheme.internal(n, m);
            if (y < y_lo || y >= y_hi) continue;
            const double x = scheme.physical(n, m);
            if (x < x_lo || x >= x_hi) continue;
            pts.push_back({{x}, 1});
            lat.push_back({n, m});
        }
    }

    // Physical projection must separate lattice points in range.
    std::vector<double> xs;
    xs.reserve(pts.size());
    for (const auto& p : pts) xs.push_back(p.position[0]);
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double gap = xs[i] - xs[i - 1];
        if (gap < 1e-9)
            throw std::invalid_argument("physical projection not injective in range");
        min_gap = std::min(min_gap, gap);
    }
    if (!std::isfinite(min_gap)) min_gap = 1.0;

    return make_point_set(1, 1, min_gap, R, std::move(pts), std::move(lat));
}

ColoredPointSet periodic_example(double R) {
    if (!(R > 0.0)) throw std::invalid_argument("window radius must be positive");
    std::vector<ColoredPoint> pts;
    const auto z_lo = static_cast<std::int64_t>(std::ceil(-R / 2.0));
    const auto z_hi = static_cast<std::int64_t>(std::floor(R / 2.0));
    for (std::int64_t z = z_lo; z <= z_hi; ++z) {
        const double x = static_cast<double>(z);
        if (!in_window(std::span<const double>(&x, 1), R)) continue;
        const std::int64_t res = ((z % 4) + 4) % 4;
        if (res == 0 || res == 2)
            pts.push_back({{x}, 1});
        else if (res == 3)
            pts.push_back({{x}, 2});
    }
    return make_point_set(1, 2, 1.0, R, std::move(pts));
}

CutProjectScheme fibonacci_scheme() {
    const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
    CutProjectScheme s;
    s.basis = {{{1.0, 1.0}, {tau, 1.0 - tau}}};
    s.window_lo = -0.5;
    s.window_hi = 0.5;
    s.scale = 1.0;
    return s;
}

}  // namespace aperiodica
