#include "aperiodica/diffraction.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "aperiodica/numerics.hpp"
#include "aperiodica/parallel.hpp"

namespace aperiodica {

namespace {

/// Densest lag support still treated as finitely locally complex, in
/// clusters per unit lag volume.
constexpr double kMaxClustersPerUnitLag = 64.0;

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

std::string to_string(DiffractionMethod method) {
    switch (method) {
        case DiffractionMethod::exponential_sum: return "exponential-sum";
        case DiffractionMethod::fourier_of_autocorrelation:
            return "fourier-of-autocorrelation";
        case DiffractionMethod::closed_form: return "closed-form";
    }
    return "unknown";
}

std::string to_string(SpectralTag tag) {
    switch (tag) {
        case SpectralTag::none: return "none";
        case SpectralTag::singular: return "singular";
        case SpectralTag::absolutely_continuous: return "absolutely-continuous";
    }
    return "unknown";
}

std::complex<double> bombieri_taylor_amplitude(const ColoredPointSet& points,
                                               const WeightSystem& w,
                                               std::span<const double> k) {
    check_weights(points, w);
    if (static_cast<int>(k.size()) != points.dimension)
        throw std::invalid_argument("wave vector dimension mismatch");
    if (!(points.window_radius > 0.0))
        throw std::invalid_argument("window radius must be positive");
    KahanComplexSum sum;
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double weight = w[points.colors[i]];
        sum.add(weight * unit_phase(dot(k, points.position(i))));
    }
    const double vol = std::pow(points.window_radius, points.dimension);
    return sum.value() / vol;
}

DiffractionEstimate exponential_sum_diffraction(
    const ColoredPointSet& points, const WeightSystem& w,
    const std::vector<std::vector<double>>& k_list, int threads) {
    check_weights(points, w);
    const int nthreads = resolve_threads(threads);
    DiffractionEstimate est;
    est.dimension = points.dimension;
    est.method = DiffractionMethod::exponential_sum;
    est.radius_used = points.window_radius;
    est.weight_system = w;
    est.source_id = fingerprint(points);
    est.intensities.assign(k_list.size(), 0.0);
    for (const auto& k : k_list) {
        if (static_cast<int>(k.size()) != points.dimension)
            throw std::invalid_argument("wave vector dimension mismatch");
        est.wavevectors.insert(est.wavevectors.end(), k.begin(), k.end());
    }
    const auto n = static_cast<std::int64_t>(k_list.size());
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto a = bombieri_taylor_amplitude(
            points, w, k_list[static_cast<std::size_t>(i)]);
        est.intensities[static_cast<std::size_t>(i)] = std::norm(a);
    }
    return est;
}

double translate_averaged_intensity(const ColoredPointSet& points,
                                    const WeightSystem& w,
                                    std::span<const double> k, int translates,
                                    std::uint64_t seed) {
    check_weights(points, w);
    if (translates < 1) throw std::invalid_argument("translates must be >= 1");
    const int d = points.dimension;
    const double sub_radius = points.window_radius / 2.0;
    const double vol = std::pow(sub_radius, d);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> offset(-points.window_radius / 4.0,
                                                  points.window_radius / 4.0);
    KahanSum mean;
    std::vector<double> u(d), y(d);
    for (int rep = 0; rep < translates; ++rep) {
        for (int a = 0; a < d; ++a) u[a] = offset(rng);
        KahanComplexSum sum;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto x = points.position(i);
            for (int a = 0; a < d; ++a) y[a] = x[a] - u[a];
            if (!in_window(y, sub_radius)) continue;
            sum.add(w[points.colors[i]] * unit_phase(dot(k, x)));
        }
        mean.add(std::norm(sum.value() / vol));
    }
    return mean.value() / translates;
}

double bragg_from_autocorrelation(const AutocorrelationMeasure& ac,
                                  std::span<const double> k) {
    if (static_cast<int>(k.size()) != ac.dimension)
        throw std::invalid_argument("wave vector dimension mismatch");
    if (!(ac.max_lag > 0.0))
        throw std::invalid_argument("autocorrelation has no lag window");

    const double lag_volume = std::pow(2.0 * ac.max_lag + 1.0, ac.dimension);
    if (static_cast<double>(ac.size()) > kMaxClustersPerUnitLag * lag_volume)
        throw std::invalid_argument(
            "autocorrelation support too dense: not finitely locally complex");

    bool integer_support = ac.dimension == 1;
    if (integer_support)
        for (std::size_t i = 0; i < ac.size(); ++i)
            if (std::abs(ac.lags[i] - std::round(ac.lags[i])) > kMatchTol) {
                integer_support = false;
                break;
            }

    // Cesaro average of the partial sums = Fejer-weighted sum, which stays
    // nonnegative for positive definite input.
    double value;
    if (integer_support) {
        const double T = std::floor(ac.max_lag + kMatchTol);
        KahanSum sum;
        for (std::size_t i = 0; i < ac.size(); ++i) {
            const double t = ac.lags[i];
            if (std::abs(t) > T + kMatchTol) continue;
            const double weight = 1.0 - std::abs(t) / (T + 1.0);
            const auto phase = unit_phase(-dot(k, ac.lag(i)));
            sum.add(weight * ac.values[i] * phase.real());
        }
        value = sum.value() / (T + 1.0);
    } else {
        const double T = ac.max_lag;
        KahanSum sum;
        for (std::size_t i = 0; i < ac.size(); ++i) {
            auto t = ac.lag(i);
            double norm = 0.0;
            for (double v : t) norm = std::max(norm, std::abs(v));
            if (norm > T + kMatchTol) continue;
            double weight = 1.0;
            for (double v : t) weight *= std::max(0.0, 1.0 - std::abs(v) / T);
            const auto phase = unit_phase(-dot(k, t));
            sum.add(weight * ac.values[i] * phase.real());
        }
        value = sum.value() / std::pow(T, ac.dimension);
    }

    if (value < 0.0) {
        if (value >= -1e-9) return 0.0;
        throw std::invalid_argument(
            "negative intensity from Fourier average: input is not a valid "
            "autocorrelation");
    }
    return value;
}

DiffractionEstimate fourier_diffraction(
    const AutocorrelationMeasure& ac,
    const std::vector<std::vector<double>>& k_list, int threads) {
    const int nthreads = resolve_threads(threads);
    DiffractionEstimate est;
    est.dimension = ac.dimension;
    est.method = DiffractionMethod::fourier_of_autocorrelation;
    est.radius_used = ac.radius_used;
    est.lag_used = ac.max_lag;
    est.weight_system = ac.weight_system;
    est.source_id = ac.source_id;
    est.intensities.assign(k_list.size(), 0.0);
    for (const auto& k : k_list)
        est.wavevectors.insert(est.wavevectors.end(), k.begin(), k.end());
    const auto n = static_cast<std::int64_t>(k_list.size());
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (std::int64_t i = 0; i < n; ++i)
        est.intensities[static_cast<std::size_t>(i)] =
            bragg_from_autocorrelation(ac, k_list[static_cast<std::size_t>(i)]);
    return est;
}

std::complex<double> window_ft(double lo, double hi, double y) {
    if (!(lo < hi)) throw std::invalid_argument("window interval must be nonempty");
    if (std::abs(y) < 1e-12) return {hi - lo, 0.0};
    const std::complex<double> num = unit_phase(-y * lo) - unit_phase(-y * hi);
    return num / std::complex<double>(0.0, 2.0 * M_PI * y);
}

BraggPeak model_set_bragg(const CutProjectScheme& scheme, std::int64_t p,
                          std::int64_t q) {
    validate_scheme(scheme);
    const double det = scheme.determinant();
    // Dual basis rows: inverse transpose of the lattice basis.
    const double d0[2] = {scheme.basis[1][1] / det, -scheme.basis[1][0] / det};
    const double d1[2] = {-scheme.basis[0][1] / det, scheme.basis[0][0] / det};
    BraggPeak peak;
    peak.p = p;
    peak.q = q;
    peak.k = static_cast<double>(p) * d0[0] + static_cast<double>(q) * d1[0];
    peak.internal = static_cast<double>(p) * d0[1] + static_cast<double>(q) * d1[1];
    const double s = scheme.scale;
    const auto wf =
        window_ft(scheme.window_lo, scheme.window_hi, -s * peak.internal);
    peak.intensity = s * s * std::norm(wf) / (det * det);
    return peak;
}

std::vector<ExtinctionRow> extinction_scan(
    const CutProjectScheme& scheme,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& k_coords,
    const std::vector<double>& scales) {
    for (double s : scales)
        if (!(s > 0.0))
            throw std::invalid_argument("window scales must be positive");
    std::vector<ExtinctionRow> rows;
    rows.reserve(k_coords.size() * scales.size());
    for (auto [p, q] : k_coords)
        for (double s : scales) {
            CutProjectScheme scaled = scheme;
            scaled.scale = s;
            const auto peak = model_set_bragg(scaled, p, q);
            rows.push_back(
                {p, q, peak.k, s, peak.intensity, peak.intensity < 1e-12});
        }
    return rows;
}

std::vector<BraggPeak> model_set_peaks(const CutProjectScheme& scheme,
                                       std::int64_t coord_range) {
    std::vector<BraggPeak> peaks;
    for (std::int64_t p = -coord_range; p <= coord_range; ++p)
        for (std::int64_t q = -coord_range; q <= coord_range; ++q)
            peaks.push_back(model_set_bragg(scheme, p, q));
    std::sort(peaks.begin(), peaks.end(), [](const BraggPeak& a, const BraggPeak& b) {
        if (a.intensity != b.intensity) return a.intensity > b.intensity;
        if (a.p != b.p) return a.p < b.p;
        return a.q < b.q;
    });
    return peaks;
}

ClosedFormValue closed_form_diffraction(ClosedFormSystem system,
                                        const WeightSystem& w, double k) {
    if (w.size() != 2)
        throw std::invalid_argument("closed forms take two-color weights");
    const double wa = w.weights[0], wb = w.weights[1];
    ClosedFormValue out;
    switch (system) {
        case ClosedFormSystem::thue_morse: {
            const bool on_lattice = std::abs(k - std::round(k)) <= kMatchTol;
            const double mean = (wa + wb) / 2.0;
            out.intensity = on_lattice ? mean * mean : 0.0;
            out.continuous =
                wa == wb ? SpectralTag::none : SpectralTag::singular;
            return out;
        }
        case ClosedFormSystem::rudin_shapiro: {
            const bool on_lattice = std::abs(k - std::round(k)) <= kMatchTol;
            const double mean = (wa + wb) / 2.0;
            out.intensity = on_lattice ? mean * mean : 0.0;
            out.continuous =
                wa == wb ? SpectralTag::none : SpectralTag::absolutely_continuous;
            return out;
        }
        case ClosedFormSystem::periodic4: {
            const bool on_lattice = std::abs(4.0 * k - std::round(4.0 * k)) <= kMatchTol;
            if (on_lattice) {
                // One period holds color a at 0 and 2 and color b at 3.
                std::complex<double> amp =
                    wa * unit_phase(0.0) + wa * unit_phase(-2.0 * k) +
                    wb * unit_phase(-3.0 * k);
                amp /= 4.0;
                out.intensity = std::norm(amp);
            }
            out.continuous = SpectralTag::none;
            return out;
        }
    }
    throw std::invalid_argument("unknown closed-form system");
}

}  // namespace aperiodica
