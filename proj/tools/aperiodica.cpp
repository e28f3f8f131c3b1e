#include <CLI11.hpp>

#include <iostream>
#include <deque>
#include <sstream>
#include <string>
#include <vector>

#include "aperiodica/commands.hpp"
#include "aperiodica/config.hpp"

namespace {

using aperiodica::ExperimentConfig;

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

std::vector<std::vector<double>> parse_tuple_list(const std::string& text) {
    std::vector<std::vector<double>> out;
    std::istringstream in(text);
    std::string group;
    while (std::getline(in, group, ';'))
        if (!group.empty()) out.push_back(parse_number_list(group));
    return out;
}

std::vector<aperiodica::ColoredPoint> parse_pattern(const std::string& text) {
    // "pos:color,pos:color" for one-dimensional anchors
    std::vector<aperiodica::ColoredPoint> anchor;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("pattern entries look like pos:color");
        aperiodica::ColoredPoint p;
        p.position = {std::stod(item.substr(0, colon))};
        p.color = std::stoi(item.substr(colon + 1));
        anchor.push_back(std::move(p));
    }
    return anchor;
}

struct Flags {
    std::string config_path, kind, input, weights, k_grid, k_list, tuples;
    std::string pattern, method, system, output, format, domain, basis, window;
    double radius = -1.0, offset = 0.0, scale = -1.0, max_lag = -1.0;
    double epsilon = -1.0, tolerance = -1.0;
    std::int64_t length = -1;
    int order = -1, translates = -1, threads = -1;
    std::uint64_t seed = 0;
    bool seed_set = false, closed = false;
};

void add_common_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config_path, "JSON config file");
    cmd->add_option("--kind", f.kind,
                    "generator kind: periodic4 | thue_morse | rudin_shapiro | "
                    "substitution | model_set");
    cmd->add_option("--input", f.input, "point-set file instead of a generator");
    cmd->add_option("-R,--radius", f.radius, "window edge R");
    cmd->add_option("--length", f.length, "minimum symbol count (sequence kinds)");
    cmd->add_option("--offset", f.offset, "suspension offset t");
    cmd->add_option("--basis", f.basis,
                    "model-set basis: fibonacci or \"a,b;c,d\" rows");
    cmd->add_option("--window", f.window, "model-set window \"lo,hi\"");
    cmd->add_option("--scale", f.scale, "model-set window scale");
    cmd->add_option("--weights", f.weights, "comma-separated weights");
    cmd->add_option("--max-lag", f.max_lag, "lag cutoff");
    cmd->add_option("--k-grid", f.k_grid, "wave vectors lo:hi:step");
    cmd->add_option("--k-list", f.k_list, "comma-separated wave vectors");
    cmd->add_option("--order", f.order, "correlation order n");
    cmd->add_option("--tuples", f.tuples,
                    "displacement tuples \"t1,..,tn;t1,..,tn\"");
    cmd->add_option("--pattern", f.pattern, "pattern anchor \"pos:color,...\"");
    cmd->add_option("--epsilon", f.epsilon, "matching half-edge / threshold");
    cmd->add_flag("--closed", f.closed, "closed matching cube");
    cmd->add_option("--method", f.method,
                    "diffraction method: exponential-sum | fourier | closed-form");
    cmd->add_option("--system", f.system,
                    "closed-form system: thue_morse | rudin_shapiro | periodic4");
    cmd->add_option("--tolerance", f.tolerance, "inequality tolerance");
    cmd->add_option("--translates", f.translates,
                    "average intensities over sampled subwindows");
    cmd->add_option("--seed", f.seed, "RNG seed for translate sampling")
        ->each([&f](const std::string&) { f.seed_set = true; });
    cmd->add_option("-o,--output", f.output, "output path (default stdout)");
    cmd->add_option("--format", f.format, "csv | json");
    cmd->add_option("--threads", f.threads,
                    "worker count (APERIODICA_THREADS also honored)");
    cmd->add_option("--domain", f.domain, "line | sequence (autocorrelate)");
}

ExperimentConfig merge(const Flags& f) {
    ExperimentConfig c;
    if (!f.config_path.empty()) c = aperiodica::load_config(f.config_path);

    if (!f.kind.empty()) {
        std::ostringstream gen;
        gen << "{\"generator\":{\"kind\":\"" << f.kind << "\"";
        if (f.kind == "periodic4" || f.kind == "model_set")
            gen << ",\"R\":" << (f.radius > 0 ? f.radius : c.generator.radius);
        if (f.kind == "thue_morse" || f.kind == "rudin_shapiro")
            gen << ",\"length\":" << (f.length > 0 ? f.length : c.generator.length);
        if (f.kind == "model_set") {
            if (!f.basis.empty()) {
                if (f.basis == "fibonacci") {
                    gen << ",\"basis\":\"fibonacci\"";
                } else {
                    auto rows = parse_tuple_list(f.basis);
                    if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
                        throw std::invalid_argument("basis rows look like a,b;c,d");
                    gen << ",\"basis\":[[" << rows[0][0] << ',' << rows[0][1]
                        << "],[" << rows[1][0] << ',' << rows[1][1] << "]]";
                }
            }
            if (!f.window.empty()) {
                auto w = parse_number_list(f.window);
                if (w.size() != 2)
                    throw std::invalid_argument("window looks like lo,hi");
                gen << ",\"window\":[" << w[0] << ',' << w[1] << "]";
            }
            if (f.scale > 0) gen << ",\"scale\":" << f.scale;
        }
        gen << "}}";
        c.generator = aperiodica::parse_config(gen.str()).generator;
        if (f.kind == "substitution")
            throw std::invalid_argument(
                "substitution systems are specified in a JSON config");
    } else {
        if (f.radius > 0) c.generator.radius = f.radius;
        if (f.length > 0) c.generator.length = f.length;
        if (f.scale > 0) c.generator.scheme.scale = f.scale;
    }
    if (f.offset != 0.0) c.generator.offset = f.offset;

    if (!f.input.empty()) c.input_path = f.input;
    if (!f.weights.empty()) c.weights = parse_number_list(f.weights);
    if (f.max_lag >= 0) c.max_lag = f.max_lag;
    if (!f.k_grid.empty())
        for (double k : aperiodica::parse_k_grid(f.k_grid)) c.k_list.push_back(k);
    if (!f.k_list.empty())
        for (double k : parse_number_list(f.k_list)) c.k_list.push_back(k);
    if (f.order > 0) c.order = f.order;
    if (!f.tuples.empty()) c.tuples = parse_tuple_list(f.tuples);
    if (!f.pattern.empty()) c.pattern_anchor = parse_pattern(f.pattern);
    if (f.epsilon >= 0) c.epsilon = f.epsilon;
    if (f.closed) c.pattern_closed = true;
    if (!f.method.empty()) c.method = f.method;
    if (!f.system.empty()) c.system = f.system;
    if (f.tolerance >= 0) c.inequality_tolerance = f.tolerance;
    if (f.translates >= 0) c.translates = f.translates;
    if (f.seed_set) c.seed = f.seed;
    if (!f.output.empty()) c.output_path = f.output;
    if (!f.format.empty()) c.format = f.format;
    if (f.threads >= 0) c.threads = f.threads;
    if (!f.domain.empty()) c.domain_sequence = f.domain == "sequence";
    if (c.translates > 0 && !c.seed)
        throw std::invalid_argument("translate averaging needs a seed");
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"colored point sets: correlations, diffraction, patterns"};
    app.require_subcommand(1);

    struct Sub {
        CLI::App* cmd;
        Flags flags;
        int (*run)(const ExperimentConfig&);
    };
    std::deque<Sub> subs;  // stable references: CLI11 keeps flag pointers
    auto add = [&](const std::string& name, const std::string& help,
                   int (*run)(const ExperimentConfig&)) {
        subs.push_back({app.add_subcommand(name, help), Flags{}, run});
        add_common_flags(subs.back().cmd, subs.back().flags);
    };
    add("generate", "write a point-set realization", aperiodica::cmd_generate);
    add("autocorrelate", "weighted autocorrelation coefficients",
        aperiodica::cmd_autocorrelate);
    add("npoint", "higher-order correlation values", aperiodica::cmd_npoint);
    add("diffract", "diffraction intensities", aperiodica::cmd_diffract);
    add("freq", "pattern frequency", aperiodica::cmd_freq);
    add("inequality", "autocorrelation-diffraction-character bound",
        aperiodica::cmd_inequality);
    add("verify", "run the verification battery", aperiodica::cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    for (auto& sub : subs) {
        if (!sub.cmd->parsed()) continue;
        try {
            return sub.run(merge(sub.flags));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 1;
        }
    }
    return 1;
}
