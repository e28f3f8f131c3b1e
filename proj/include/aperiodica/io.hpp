#pragma once

#include <string>
#include <vector>

#include "aperiodica/analysis.hpp"
#include "aperiodica/correlations.hpp"
#include "aperiodica/diffraction.hpp"
#include "aperiodica/point_set.hpp"

namespace aperiodica {

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// Point-set text format: header "d m r R count", then one line per point
/// "x_1 ... x_d color". Exact lattice coordinates are an in-memory
/// enrichment and are not serialized.
std::string point_set_to_text(const ColoredPointSet& set);
ColoredPointSet point_set_from_text(const std::string& text);
void save_point_set(const ColoredPointSet& set, const std::string& path);
ColoredPointSet load_point_set(const std::string& path);

/// CSV rows "t,eta" (or "t1,...,td,eta" above one dimension).
std::string autocorrelation_to_csv(const AutocorrelationMeasure& ac);
/// JSON with entries plus estimator metadata.
std::string autocorrelation_to_json(const AutocorrelationMeasure& ac);

/// CSV rows "t1,...,tn,value".
std::string tensor_to_csv(const CorrelationTensor& tensor);

/// CSV rows "k,intensity,method".
std::string diffraction_to_csv(const DiffractionEstimate& est);
std::string diffraction_to_json(const DiffractionEstimate& est);

/// CSV rows "k,t,lhs,rhs,slack,pass".
std::string inequality_to_csv(const InequalityReport& report);

std::string intensity_report_to_json(const IntensityReport& report);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace aperiodica
