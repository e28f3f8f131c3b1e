#include "aperiodica/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace aperiodica {

namespace {

using nlohmann::json;

json weights_json(const WeightSystem& w) { return json(w.weights); }

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    // trim to the shortest form that round-trips
    for (int prec = 1; prec < 17; ++prec) {
        char shorter[40];
        std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
        if (std::strtod(shorter, nullptr) == v) return shorter;
    }
    return buf;
}

std::string point_set_to_text(const ColoredPointSet& set) {
    std::ostringstream out;
    out << set.dimension << ' ' << set.num_colors << ' '
        << format_double(set.separation) << ' '
        << format_double(set.window_radius) << ' ' << set.size() << '\n';
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto x = set.position(i);
        for (int a = 0; a < set.dimension; ++a) out << format_double(x[a]) << ' ';
        out << set.colors[i] << '\n';
    }
    return out.str();
}

ColoredPointSet point_set_from_text(const std::string& text) {
    std::istringstream in(text);
    int d = 0, m = 0;
    double r = 0.0, radius = 0.0;
    std::size_t count = 0;
    if (!(in >> d >> m >> r >> radius >> count))
        throw std::invalid_argument("malformed point-set header");
    std::vector<ColoredPoint> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        ColoredPoint p;
        p.position.resize(d);
        for (int a = 0; a < d; ++a)
            if (!(in >> p.position[a]))
                throw std::invalid_argument("malformed point line");
        if (!(in >> p.color))
            throw std::invalid_argument("malformed point line");
        pts.push_back(std::move(p));
    }
    return make_point_set(d, m, r, radius, std::move(pts));
}

void save_point_set(const ColoredPointSet& set, const std::string& path) {
    write_text_file(path, point_set_to_text(set));
}

ColoredPointSet load_point_set(const std::string& path) {
    return point_set_from_text(read_text_file(path));
}

std::string autocorrelation_to_csv(const AutocorrelationMeasure& ac) {
    std::ostringstream out;
    if (ac.dimension == 1) {
        out << "t,eta\n";
    } else {
        for (int a = 1; a <= ac.dimension; ++a) out << 't' << a << ',';
        out << "eta\n";
    }
    for (std::size_t i = 0; i < ac.size(); ++i) {
        const auto t = ac.lag(i);
        for (int a = 0; a < ac.dimension; ++a) out << format_double(t[a]) << ',';
        out << format_double(ac.values[i]) << '\n';
    }
    return out.str();
}

std::string autocorrelation_to_json(const AutocorrelationMeasure& ac) {
    json j;
    j["R"] = ac.radius_used;
    j["inner_radius"] = ac.inner_radius;
    j["max_lag"] = ac.max_lag;
    j["w"] = weights_json(ac.weight_system);
    j["estimator"] = "eroded-window";
    j["intensity"] = ac.intensity;
    json entries = json::array();
    for (std::size_t i = 0; i < ac.size(); ++i) {
        const auto t = ac.lag(i);
        entries.push_back({{"t", std::vector<double>(t.begin(), t.end())},
                           {"eta", ac.values[i]}});
    }
    j["entries"] = entries;
    return j.dump(2);
}

std::string tensor_to_csv(const CorrelationTensor& tensor) {
    std::ostringstream out;
    const int width = tensor.order * tensor.dimension;
    for (int a = 1; a <= width; ++a) out << 't' << a << ',';
    out << "value\n";
    for (std::size_t i = 0; i < tensor.values.size(); ++i) {
        for (double v : tensor.tuples[i]) out << format_double(v) << ',';
        out << format_double(tensor.values[i]) << '\n';
    }
    return out.str();
}

std::string diffraction_to_csv(const DiffractionEstimate& est) {
    std::ostringstream out;
    out << "k,intensity,method\n";
    const std::string method = to_string(est.method);
    for (std::size_t i = 0; i < est.size(); ++i) {
        const auto k = est.wavevector(i);
        for (int a = 0; a < est.dimension; ++a) {
            if (a) out << ' ';
            out << format_double(k[a]);
        }
        out << ',' << format_double(est.intensities[i]) << ',' << method << '\n';
    }
    if (!est.continuous_component.empty())
        out << "# continuous-component: " << est.continuous_component << '\n';
    return out.str();
}

std::string diffraction_to_json(const DiffractionEstimate& est) {
    json j;
    j["method"] = to_string(est.method);
    j["R"] = est.radius_used;
    j["lag_used"] = est.lag_used;
    j["w"] = weights_json(est.weight_system);
    if (!est.continuous_component.empty())
        j["continuous_component"] = est.continuous_component;
    json entries = json::array();
    for (std::size_t i = 0; i < est.size(); ++i) {
        const auto k = est.wavevector(i);
        entries.push_back({{"k", std::vector<double>(k.begin(), k.end())},
                           {"intensity", est.intensities[i]}});
    }
    j["entries"] = entries;
    return j.dump(2);
}

std::string inequality_to_csv(const InequalityReport& report) {
    std::ostringstream out;
    out << "k,t,lhs,rhs,slack,pass\n";
    for (const auto& row : report.rows) {
        out << format_double(row.k) << ',' << format_double(row.t) << ','
            << format_double(row.lhs) << ',' << format_double(row.rhs) << ','
            << format_double(row.slack) << ',' << (row.pass ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string intensity_report_to_json(const IntensityReport& report) {
    json j;
    j["per_color"] = report.per_color;
    j["weighted"] = report.weighted;
    j["radius_used"] = report.radius_used;
    return j.dump(2);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace aperiodica
