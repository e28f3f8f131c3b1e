#include "aperiodica/config.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "aperiodica/io.hpp"

namespace aperiodica {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, const std::set<std::string>& known,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw std::invalid_argument("unknown key \"" + it.key() + "\" in " +
                                        where);
}

GeneratorSpec parse_generator(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("generator needs a \"kind\"");
    GeneratorSpec g;
    g.kind = j.at("kind").get<std::string>();
    if (g.kind == "periodic4") {
        reject_unknown_keys(j, {"kind", "R"}, "periodic4 generator");
        g.radius = j.at("R").get<double>();
    } else if (g.kind == "thue_morse" || g.kind == "rudin_shapiro") {
        reject_unknown_keys(j, {"kind", "length", "offset", "tile_lengths", "reduce"},
                            g.kind + " generator");
        g.length = j.at("length").get<std::int64_t>();
        g.offset = j.value("offset", 0.0);
        if (j.contains("tile_lengths"))
            g.tile_lengths = j.at("tile_lengths").get<std::vector<double>>();
        g.reduce = j.value("reduce", true);
    } else if (g.kind == "substitution") {
        reject_unknown_keys(
            j, {"kind", "alphabet_size", "rules", "tile_lengths", "seed",
                "length", "offset"},
            "substitution generator");
        g.substitution.alphabet_size = j.at("alphabet_size").get<int>();
        g.substitution.rules =
            j.at("rules").get<std::vector<std::vector<int>>>();
        g.substitution.tile_lengths =
            j.value("tile_lengths",
                    std::vector<double>(g.substitution.alphabet_size, 1.0));
        g.substitution.seed = j.value("seed", 1);
        g.length = j.at("length").get<std::int64_t>();
        g.offset = j.value("offset", 0.0);
        g.tile_lengths = g.substitution.tile_lengths;
    } else if (g.kind == "model_set") {
        reject_unknown_keys(j, {"kind", "basis", "window", "scale", "R"},
                            "model_set generator");
        if (j.contains("basis")) {
            if (j.at("basis").is_string()) {
                const auto name = j.at("basis").get<std::string>();
                if (name == "fibonacci")
                    g.scheme = fibonacci_scheme();
                else
                    throw std::invalid_argument("unknown basis name: " + name);
            } else {
                const auto rows =
                    j.at("basis").get<std::vector<std::vector<double>>>();
                if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
                    throw std::invalid_argument("basis must be 2x2");
                g.scheme.basis = {{{rows[0][0], rows[0][1]},
                                   {rows[1][0], rows[1][1]}}};
            }
        }
        if (j.contains("window")) {
            const auto w = j.at("window").get<std::vector<double>>();
            if (w.size() != 2)
                throw std::invalid_argument("window must be [lo, hi]");
            g.scheme.window_lo = w[0];
            g.scheme.window_hi = w[1];
        }
        g.scheme.scale = j.value("scale", 1.0);
        g.radius = j.at("R").get<double>();
        validate_scheme(g.scheme);
    } else {
        throw std::invalid_argument("unknown generator kind: " + g.kind);
    }
    return g;
}

std::vector<ColoredPoint> parse_anchor(const json& j) {
    std::vector<ColoredPoint> anchor;
    for (const auto& e : j) {
        ColoredPoint p;
        p.position = e.at("position").get<std::vector<double>>();
        p.color = e.at("color").get<int>();
        anchor.push_back(std::move(p));
    }
    return anchor;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") +
                                    e.what());
    }
    reject_unknown_keys(
        j,
        {"generator", "input", "weights", "max_lag", "k_list", "k_grid",
         "epsilon", "pattern", "order", "tuples", "method", "system",
         "inequality", "translates", "seed", "output", "format", "threads",
         "domain"},
        "config");

    ExperimentConfig c;
    if (j.contains("generator")) c.generator = parse_generator(j.at("generator"));
    c.input_path = j.value("input", std::string{});
    if (j.contains("weights")) c.weights = j.at("weights").get<std::vector<double>>();
    c.max_lag = j.value("max_lag", 0.0);
    if (j.contains("k_list")) c.k_list = j.at("k_list").get<std::vector<double>>();
    if (j.contains("k_grid"))
        for (double k : parse_k_grid(j.at("k_grid").get<std::string>()))
            c.k_list.push_back(k);
    c.epsilon = j.value("epsilon", 0.0);
    if (j.contains("pattern")) {
        const auto& p = j.at("pattern");
        reject_unknown_keys(p, {"anchor", "epsilon", "closed"}, "pattern");
        c.pattern_anchor = parse_anchor(p.at("anchor"));
        c.epsilon = p.at("epsilon").get<double>();
        c.pattern_closed = p.value("closed", false);
    }
    c.order = j.value("order", 1);
    if (j.contains("tuples"))
        c.tuples = j.at("tuples").get<std::vector<std::vector<double>>>();
    c.method = j.value("method", std::string{"exponential-sum"});
    c.system = j.value("system", std::string{});
    if (j.contains("inequality")) {
        const auto& q = j.at("inequality");
        reject_unknown_keys(q, {"k_set", "t_set", "tolerance"}, "inequality");
        if (q.contains("k_set"))
            c.inequality_k = q.at("k_set").get<std::vector<double>>();
        if (q.contains("t_set"))
            c.inequality_t = q.at("t_set").get<std::vector<double>>();
        c.inequality_tolerance = q.value("tolerance", 1e-2);
    }
    c.translates = j.value("translates", 0);
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    c.output_path = j.value("output", std::string{});
    c.format = j.value("format", std::string{"csv"});
    c.threads = j.value("threads", 0);
    c.domain_sequence = j.value("domain", std::string{"line"}) == "sequence";

    if (c.format != "csv" && c.format != "json")
        throw std::invalid_argument("format must be csv or json");
    if (c.threads < 0) throw std::invalid_argument("threads must be >= 0");
    if (c.translates < 0) throw std::invalid_argument("translates must be >= 0");
    if (c.translates > 0 && !c.seed)
        throw std::invalid_argument("translate averaging needs a seed");
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    return parse_config(read_text_file(path));
}

SequenceWindow realize_sequence(const ExperimentConfig& config) {
    const auto& g = config.generator;
    if (g.kind == "thue_morse")
        return substitution_fixed_point(thue_morse_system(), g.length);
    if (g.kind == "rudin_shapiro") {
        auto seq = substitution_fixed_point(rudin_shapiro_system(), g.length);
        return g.reduce ? reduce_rudin_shapiro(seq) : seq;
    }
    if (g.kind == "substitution")
        return substitution_fixed_point(g.substitution, g.length);
    throw std::invalid_argument("generator kind has no symbol sequence: " +
                                g.kind);
}

ColoredPointSet realize_point_set(const ExperimentConfig& config) {
    if (!config.input_path.empty()) return load_point_set(config.input_path);
    const auto& g = config.generator;
    if (g.kind.empty())
        throw std::invalid_argument("config needs a generator or an input file");
    if (g.kind == "periodic4") return periodic_example(g.radius);
    if (g.kind == "model_set") return model_set(g.scheme, g.radius);
    if (g.is_sequence_kind()) {
        const auto seq = realize_sequence(config);
        std::vector<double> lengths = g.tile_lengths;
        if (lengths.empty()) lengths.assign(seq.num_colors, 1.0);
        return suspend(seq, lengths, g.offset);
    }
    throw std::invalid_argument("unknown generator kind: " + g.kind);
}

std::vector<double> parse_k_grid(const std::string& spec) {
    double lo = 0.0, hi = 0.0, step = 0.0;
    char colon1 = 0, colon2 = 0;
    std::istringstream in(spec);
    if (!(in >> lo >> colon1 >> hi >> colon2 >> step) || colon1 != ':' ||
        colon2 != ':' || !(step > 0.0))
        throw std::invalid_argument("k grid must be lo:hi:step with step > 0");
    std::vector<double> out;
    for (int i = 0;; ++i) {
        const double k = lo + i * step;
        if (k > hi + 1e-12) break;
        out.push_back(k);
    }
    return out;
}

}  // namespace aperiodica
