#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aperiodica/correlations.hpp"
#include "aperiodica/generators.hpp"
#include "aperiodica/point_set.hpp"

namespace aperiodica {

enum class DiffractionMethod {
    exponential_sum,
    fourier_of_autocorrelation,
    closed_form,
};

std::string to_string(DiffractionMethod method);

/// Wave vector -> nonnegative intensity, with the estimator that produced it.
struct DiffractionEstimate {
    int dimension = 1;
    DiffractionMethod method = DiffractionMethod::exponential_sum;
    std::vector<double> wavevectors;  // count * dimension
    std::vector<double> intensities;  // count
    double radius_used = 0.0;         // window edge (exponential-sum)
    double lag_used = 0.0;            // lag cutoff (fourier-of-autocorrelation)
    WeightSystem weight_system;
    std::uint64_t source_id = 0;
    std::string continuous_component;  // closed forms: spectral tag, else empty

    std::size_t size() const { return intensities.size(); }
    std::span<const double> wavevector(std::size_t i) const {
        return {wavevectors.data() + i * static_cast<std::size_t>(dimension),
                static_cast<std::size_t>(dimension)};
    }
};

/// Normalized exponential sum over the full window:
///   (1/vol) * sum_x w(x) e^{+2 pi i k.x}.
/// The squared modulus estimates the Bragg intensity at k.
std::complex<double> bombieri_taylor_amplitude(const ColoredPointSet& points,
                                               const WeightSystem& w,
                                               std::span<const double> k);

/// Batch intensities |amplitude|^2 over a k list; k values evaluate in
/// parallel, each sum running in sorted point order.
DiffractionEstimate exponential_sum_diffraction(
    const ColoredPointSet& points, const WeightSystem& w,
    const std::vector<std::vector<double>>& k_list, int threads = 0);

/// Square-mean emulation: intensities averaged over `translates` uniformly
/// sampled subwindows of half the window edge. Deterministic given the seed.
double translate_averaged_intensity(const ColoredPointSet& points,
                                    const WeightSystem& w,
                                    std::span<const double> k, int translates,
                                    std::uint64_t seed);

/// Pure-point intensity at k extracted from an autocorrelation by a Cesaro
/// (Fejer-weighted) average of e^{-2 pi i k.t} over the lag window. Integer
/// 1D support uses lag-count normalization, other supports volume
/// normalization. Rejects supports too dense to be finitely locally complex.
double bragg_from_autocorrelation(const AutocorrelationMeasure& ac,
                                  std::span<const double> k);

DiffractionEstimate fourier_diffraction(
    const AutocorrelationMeasure& ac,
    const std::vector<std::vector<double>>& k_list, int threads = 0);

/// Fourier transform of the indicator of [lo, hi):
///   integral of e^{-2 pi i y x} dx, with the y -> 0 limit (hi - lo) taken
///   analytically for |y| < 1e-12.
std::complex<double> window_ft(double lo, double hi, double y);

struct BraggPeak {
    std::int64_t p = 0, q = 0;  // dual lattice coordinates
    double k = 0.0;             // physical position of the peak
    double internal = 0.0;      // internal projection of the dual point
    double intensity = 0.0;
};

/// Closed-form Bragg peak of a cut-and-project set at the dual lattice point
/// with integer coordinates (p, q): position pi_1, intensity
///   s^2 |window_ft(-s pi_2)|^2 / covolume^2
/// (the covolume factor normalizes the scheme to covolume 1, making the
/// k = 0 intensity equal the squared point density).
BraggPeak model_set_bragg(const CutProjectScheme& scheme, std::int64_t p,
                          std::int64_t q);

struct ExtinctionRow {
    std::int64_t p = 0, q = 0;
    double k = 0.0;
    double scale = 0.0;
    double intensity = 0.0;
    bool extinct = false;  // intensity below 1e-12
};

/// model_set_bragg over a grid of window scales; scales must be positive.
std::vector<ExtinctionRow> extinction_scan(
    const CutProjectScheme& scheme,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& k_coords,
    const std::vector<double>& scales);

/// Bragg peaks of the scheme with |p|, |q| <= coord_range, sorted by
/// decreasing intensity.
std::vector<BraggPeak> model_set_peaks(const CutProjectScheme& scheme,
                                       std::int64_t coord_range);

enum class SpectralTag { none, singular, absolutely_continuous };

std::string to_string(SpectralTag tag);

enum class ClosedFormSystem { thue_morse, rudin_shapiro, periodic4 };

struct ClosedFormValue {
    double intensity = 0.0;  // pure-point part at k
    SpectralTag continuous = SpectralTag::none;
};

/// Known pure-point diffraction values for the bundled example systems,
/// plus the type of their continuous spectral component.
ClosedFormValue closed_form_diffraction(ClosedFormSystem system,
                                        const WeightSystem& w, double k);

}  // namespace aperiodica
