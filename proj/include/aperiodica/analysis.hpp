#pragma once

#include <vector>

#include "aperiodica/correlations.hpp"
#include "aperiodica/diffraction.hpp"

namespace aperiodica {

/// One evaluation of the bound
///   |e^{2 pi i k.t} - 1| * sqrt(intensity(k)) <= 2 (eta(0) - eta(t)).
struct InequalityRow {
    double k = 0.0;
    double t = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    bool pass = false;   // slack >= -tolerance
};

struct InequalityReport {
    std::vector<InequalityRow> rows;
    double tolerance = 0.0;

    bool all_pass() const {
        for (const auto& row : rows)
            if (!row.pass) return false;
        return true;
    }
};

/// Support displacements t with eta(0) - eta(t) < epsilon, the epsilon-
/// statistical almost periods. Uses the weight-1 convention of the bound.
std::vector<double> almost_periods(const AutocorrelationMeasure& ac,
                                   double epsilon);

/// Wave vectors whose estimated intensity exceeds a.
std::vector<double> bragg_peaks_above(const DiffractionEstimate& diff,
                                      double a);

/// Evaluates the bound on the (k, t) grid. Both inputs must come from the
/// same uncolored (weight-1) realization; mismatched sources are refused.
InequalityReport verify_inequality(const AutocorrelationMeasure& ac,
                                   const DiffractionEstimate& diff,
                                   const std::vector<double>& k_set,
                                   const std::vector<double>& t_set,
                                   double tolerance, int threads = 0);

}  // namespace aperiodica
