#include "aperiodica/commands.hpp"

#include <iostream>
#include <stdexcept>

#include "aperiodica/analysis.hpp"
#include "aperiodica/correlations.hpp"
#include "aperiodica/diffraction.hpp"
#include "aperiodica/io.hpp"
#include "aperiodica/verify.hpp"

namespace aperiodica {

namespace {

void emit(const ExperimentConfig& config, const std::string& content) {
    if (config.output_path.empty())
        std::cout << content;
    else
        write_text_file(config.output_path, content);
}

WeightSystem weights_for(const ExperimentConfig& config, int num_colors) {
    if (config.weights.empty())
        return WeightSystem{std::vector<double>(num_colors, 1.0)};
    if (static_cast<int>(config.weights.size()) != num_colors)
        throw std::invalid_argument("weights length must match the color count");
    return WeightSystem{config.weights};
}

std::vector<std::vector<double>> k_columns(const ExperimentConfig& config) {
    if (config.k_list.empty())
        throw std::invalid_argument("no wave vectors given (k_list or k_grid)");
    std::vector<std::vector<double>> kk;
    kk.reserve(config.k_list.size());
    for (double k : config.k_list) kk.push_back({k});
    return kk;
}

ClosedFormSystem closed_form_tag(const std::string& system) {
    if (system == "thue_morse") return ClosedFormSystem::thue_morse;
    if (system == "rudin_shapiro") return ClosedFormSystem::rudin_shapiro;
    if (system == "periodic4") return ClosedFormSystem::periodic4;
    throw std::invalid_argument("unknown closed-form system: " + system);
}

}  // namespace

int cmd_generate(const ExperimentConfig& config) {
    const auto set = realize_point_set(config);
    emit(config, point_set_to_text(set));
    return 0;
}

int cmd_autocorrelate(const ExperimentConfig& config) {
    AutocorrelationMeasure ac;
    if (config.domain_sequence) {
        const auto seq = realize_sequence(config);
        const auto w = weights_for(config, seq.num_colors);
        ac = sequence_autocorrelation(seq, w,
                                      static_cast<std::int64_t>(config.max_lag),
                                      config.threads);
    } else {
        const auto set = realize_point_set(config);
        const auto w = weights_for(config, set.num_colors);
        ac = autocorrelation(set, w, config.max_lag, config.threads);
    }
    emit(config, config.format == "json" ? autocorrelation_to_json(ac)
                                         : autocorrelation_to_csv(ac));
    return 0;
}

int cmd_npoint(const ExperimentConfig& config) {
    const auto set = realize_point_set(config);
    const auto w = weights_for(config, set.num_colors);
    if (config.tuples.empty())
        throw std::invalid_argument("npoint needs displacement tuples");
    const auto tensor = npoint_correlation(set, w, config.tuples, config.order,
                                           config.threads);
    emit(config, tensor_to_csv(tensor));
    return 0;
}

int cmd_diffract(const ExperimentConfig& config) {
    DiffractionEstimate est;
    if (config.method == "exponential-sum") {
        const auto set = realize_point_set(config);
        const auto w = weights_for(config, set.num_colors);
        const auto kk = k_columns(config);
        if (config.translates > 0) {
            est.dimension = set.dimension;
            est.method = DiffractionMethod::exponential_sum;
            est.radius_used = set.window_radius;
            est.weight_system = w;
            est.source_id = fingerprint(set);
            for (const auto& k : kk) {
                est.wavevectors.insert(est.wavevectors.end(), k.begin(), k.end());
                est.intensities.push_back(translate_averaged_intensity(
                    set, w, k, config.translates, *config.seed));
            }
        } else {
            est = exponential_sum_diffraction(set, w, kk, config.threads);
        }
    } else if (config.method == "fourier") {
        const auto set = realize_point_set(config);
        const auto w = weights_for(config, set.num_colors);
        if (!(config.max_lag > 0.0))
            throw std::invalid_argument("fourier method needs max_lag");
        const auto ac = autocorrelation(set, w, config.max_lag, config.threads);
        est = fourier_diffraction(ac, k_columns(config), config.threads);
    } else if (config.method == "closed-form") {
        if (config.system.empty())
            throw std::invalid_argument("closed-form method needs a system tag");
        const auto tag = closed_form_tag(config.system);
        const auto w = weights_for(config, 2);
        est.dimension = 1;
        est.method = DiffractionMethod::closed_form;
        est.weight_system = w;
        for (double k : config.k_list) {
            const auto value = closed_form_diffraction(tag, w, k);
            est.wavevectors.push_back(k);
            est.intensities.push_back(value.intensity);
            est.continuous_component = to_string(value.continuous);
        }
    } else {
        throw std::invalid_argument("unknown method: " + config.method);
    }
    emit(config, config.format == "json" ? diffraction_to_json(est)
                                         : diffraction_to_csv(est));
    return 0;
}

int cmd_freq(const ExperimentConfig& config) {
    const auto set = realize_point_set(config);
    if (config.pattern_anchor.empty())
        throw std::invalid_argument("freq needs a pattern");
    Pattern pattern{config.pattern_anchor, config.epsilon, config.pattern_closed};
    const double f = pattern_frequency(set, pattern, config.threads);
    emit(config, "frequency\n" + format_double(f) + "\n");
    return 0;
}

int cmd_inequality(const ExperimentConfig& config) {
    auto set = realize_point_set(config);
    if (set.num_colors > 1) set = flatten(set);
    const WeightSystem w1{std::vector<double>(1, 1.0)};
    if (!config.weights.empty())
        for (double v : config.weights)
            if (v != 1.0)
                throw std::invalid_argument(
                    "the bound is evaluated on uncolored (weight-1) sets");
    if (!(config.max_lag > 0.0))
        throw std::invalid_argument("inequality needs max_lag");
    const auto ac = autocorrelation(set, w1, config.max_lag, config.threads);

    std::vector<double> k_set = config.inequality_k;
    if (k_set.empty()) k_set = config.k_list;
    if (k_set.empty()) throw std::invalid_argument("inequality needs a k set");
    std::vector<double> t_set = config.inequality_t;
    if (t_set.empty())
        for (std::size_t i = 0; i < ac.size() && t_set.size() < 20; ++i)
            if (ac.lags[i] >= 0.0) t_set.push_back(ac.lags[i]);

    std::vector<std::vector<double>> kk;
    for (double k : k_set) kk.push_back({k});
    const auto diff = exponential_sum_diffraction(set, w1, kk, config.threads);
    const auto report = verify_inequality(ac, diff, k_set, t_set,
                                          config.inequality_tolerance,
                                          config.threads);
    emit(config, inequality_to_csv(report));
    return report.all_pass() ? 0 : 2;
}

int cmd_verify(const ExperimentConfig& config) {
    const auto results = verify::run_acceptance(config.threads);
    std::ostringstream out;
    for (const auto& r : results) out << verify::format_result(r) << '\n';
    emit(config, out.str());
    if (config.output_path.empty())
        std::cout.flush();
    else
        for (const auto& r : results)
            std::cout << verify::format_result(r) << '\n';
    return verify::all_pass(results) ? 0 : 2;
}

}  // namespace aperiodica
