#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aperiodica/correlations.hpp"
#include "aperiodica/generators.hpp"
#include "aperiodica/point_set.hpp"
#include "aperiodica/sequence.hpp"

namespace aperiodica {

/// Generator descriptor as it appears in JSON configs:
///   {"kind": "thue_morse" | "rudin_shapiro" | "model_set" | "periodic4"
///          | "substitution", ...parameters}
struct GeneratorSpec {
    std::string kind;
    double radius = 0.0;           // periodic4 / model_set
    std::int64_t length = 0;       // sequence kinds: minimum symbol count
    double offset = 0.0;           // suspension offset t
    std::vector<double> tile_lengths;  // optional; default all-1
    bool reduce = true;            // rudin_shapiro: reduce to two letters
    SubstitutionSystem substitution;  // kind == "substitution"
    CutProjectScheme scheme;       // kind == "model_set"

    bool is_sequence_kind() const {
        return kind == "thue_morse" || kind == "rudin_shapiro" ||
               kind == "substitution";
    }
};

/// One experiment: a source realization plus estimator parameters.
/// Parsed from a JSON file; command-line flags override individual fields.
struct ExperimentConfig {
    GeneratorSpec generator;
    std::string input_path;  // alternative to generator: point-set file
    std::vector<double> weights;
    double max_lag = 0.0;
    std::vector<double> k_list;
    double epsilon = 0.0;
    bool pattern_closed = false;
    std::vector<ColoredPoint> pattern_anchor;
    int order = 1;
    std::vector<std::vector<double>> tuples;
    std::string method = "exponential-sum";
    std::string system;  // closed-form system tag
    std::vector<double> inequality_k, inequality_t;
    double inequality_tolerance = 1e-2;
    int translates = 0;
    std::optional<std::uint64_t> seed;
    std::string output_path;
    std::string format = "csv";
    int threads = 0;

    bool domain_sequence = false;  // autocorrelate on the symbol sequence
};

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

/// Builds the point set a config describes (generator or input file).
ColoredPointSet realize_point_set(const ExperimentConfig& config);

/// Builds the symbol window for sequence-kind generators.
SequenceWindow realize_sequence(const ExperimentConfig& config);

/// Expands "lo:hi:step" into a k list (inclusive of lo, exclusive of hi
/// beyond rounding slack).
std::vector<double> parse_k_grid(const std::string& spec);

}  // namespace aperiodica
