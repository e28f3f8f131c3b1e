#include "aperiodica/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "aperiodica/numerics.hpp"
#include "aperiodica/parallel.hpp"

namespace aperiodica {

namespace {

bool weight_one(const WeightSystem& w) {
    for (double v : w.weights)
        if (v != 1.0) return false;
    return true;
}

}  // namespace

std::vector<double> almost_periods(const AutocorrelationMeasure& ac,
                                   double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (ac.dimension != 1)
        throw std::invalid_argument("almost periods are computed on the line");
    const double eta0 = ac.at_zero();
    std::vector<double> out;
    for (std::size_t i = 0; i < ac.size(); ++i)
        if (eta0 - ac.values[i] < epsilon) out.push_back(ac.lags[i]);
    return out;
}

std::vector<double> bragg_peaks_above(const DiffractionEstimate& diff,
                                      double a) {
    if (!(a > 0.0)) throw std::invalid_argument("threshold must be positive");
    if (diff.dimension != 1)
        throw std::invalid_argument("peak listing is computed on the line");
    std::vector<double> out;
    for (std::size_t i = 0; i < diff.size(); ++i)
        if (diff.intensities[i] > a) out.push_back(diff.wavevectors[i]);
    return out;
}

InequalityReport verify_inequality(const AutocorrelationMeasure& ac,
                                   const DiffractionEstimate& diff,
                                   const std::vector<double>& k_set,
                                   const std::vector<double>& t_set,
                                   double tolerance, int threads) {
    if (ac.dimension != 1 || diff.dimension != 1)
        throw std::invalid_argument("the bound is evaluated on the line");
    if (!weight_one(ac.weight_system) || !weight_one(diff.weight_system))
        throw std::invalid_argument("the bound requires weight-1 (uncolored) input");
    if (ac.source_id != 0 && diff.source_id != 0 && ac.source_id != diff.source_id)
        throw std::invalid_argument("autocorrelation and diffraction come from "
                                    "different point sets");
    const int nthreads = resolve_threads(threads);

    InequalityReport report;
    report.tolerance = tolerance;
    report.rows.resize(k_set.size() * t_set.size());
    const double eta0 = ac.at_zero();

    const auto nk = static_cast<std::int64_t>(k_set.size());
    const auto nt = static_cast<std::int64_t>(t_set.size());
#pragma omp parallel for collapse(2) schedule(static) num_threads(nthreads)
    for (std::int64_t ik = 0; ik < nk; ++ik)
        for (std::int64_t it = 0; it < nt; ++it) {
            const double k = k_set[static_cast<std::size_t>(ik)];
            const double t = t_set[static_cast<std::size_t>(it)];
            double intensity = 0.0;
            for (std::size_t i = 0; i < diff.size(); ++i)
                if (nearly_equal(diff.wavevectors[i], k)) {
                    intensity = diff.intensities[i];
                    break;
                }
            const double eta_t = ac.value_at_or_zero(std::span<const double>(&t, 1));
            const double lhs =
                std::abs(unit_phase(k * t) - 1.0) * std::sqrt(std::max(0.0, intensity));
            const double rhs = 2.0 * (eta0 - eta_t);
            InequalityRow row;
            row.k = k;
            row.t = t;
            row.lhs = lhs;
            row.rhs = rhs;
            row.slack = rhs - lhs;
            row.pass = row.slack >= -tolerance;
            report.rows[static_cast<std::size_t>(ik) * t_set.size() +
                        static_cast<std::size_t>(it)] = row;
        }
    return report;
}

}  // namespace aperiodica
