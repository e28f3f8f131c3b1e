#include <doctest.h>

#include <cstdio>
#include <random>
#include <set>

#include "aperiodica/commands.hpp"
#include "aperiodica/config.hpp"
#include "aperiodica/generators.hpp"
#include "aperiodica/io.hpp"

using namespace aperiodica;

TEST_CASE("point-set text round trip") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> pos(-49.9, 49.9);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<ColoredPoint> pts;
        std::set<std::int64_t> used;
        std::uniform_int_distribution<int> color(1, 3);
        for (int i = 0; i < 40; ++i) {
            const double x = pos(rng);
            if (!used.insert(std::llround(x * 1e6)).second) continue;
            pts.push_back({{x}, color(rng)});
        }
        const auto set = make_point_set(1, 3, 1e-6, 100.0, std::move(pts));
        const auto back = point_set_from_text(point_set_to_text(set));
        CHECK(back.coords == set.coords);  // exact decimal round trip
        CHECK(back.colors == set.colors);
        CHECK(back.window_radius == set.window_radius);
    }
}

TEST_CASE("csv and json emission") {
    const auto set = periodic_example(100.0);
    const auto ac = autocorrelation(set, {{1.0, 1.0}}, 4.0);
    const auto csv = autocorrelation_to_csv(ac);
    CHECK(csv.rfind("t,eta\n", 0) == 0);
    CHECK(csv.find("0,0.75") != std::string::npos);

    const auto j = autocorrelation_to_json(ac);
    CHECK(j.find("\"estimator\": \"eroded-window\"") != std::string::npos);

    const auto diff = exponential_sum_diffraction(set, {{1.0, 1.0}}, {{0.25}});
    const auto dcsv = diffraction_to_csv(diff);
    CHECK(dcsv.rfind("k,intensity,method\n", 0) == 0);
    CHECK(dcsv.find("exponential-sum") != std::string::npos);

    const auto rep = empirical_intensity(set, {{1.0, 1.0}});
    const auto rj = intensity_report_to_json(rep);
    CHECK(rj.find("per_color") != std::string::npos);
    CHECK(rj.find("radius_used") != std::string::npos);
}

TEST_CASE("config parsing and validation") {
    SUBCASE("full config") {
        const auto c = parse_config(R"({
            "generator": {"kind": "periodic4", "R": 64},
            "weights": [1, 1],
            "max_lag": 8,
            "k_grid": "0:1:0.25",
            "output": "out.csv",
            "threads": 2
        })");
        CHECK(c.generator.kind == "periodic4");
        CHECK(c.generator.radius == 64.0);
        CHECK(c.k_list.size() == 5);
        CHECK(c.threads == 2);
        const auto set = realize_point_set(c);
        CHECK(set.size() == 48);
    }
    SUBCASE("unknown keys are rejected") {
        CHECK_THROWS_WITH(parse_config(R"({"generater": {}})"),
                          doctest::Contains("unknown key"));
    }
    SUBCASE("bad JSON is rejected") {
        CHECK_THROWS_WITH(parse_config("{nope"), doctest::Contains("JSON"));
    }
    SUBCASE("unknown generator kinds are rejected") {
        CHECK_THROWS(parse_config(R"({"generator": {"kind": "penrose"}})"));
    }
    SUBCASE("substitution generator") {
        const auto c = parse_config(R"({
            "generator": {"kind": "substitution", "alphabet_size": 2,
                          "rules": [[1,2],[2,1]], "length": 64}
        })");
        const auto seq = realize_sequence(c);
        CHECK(seq.size() == 64);
        const auto set = realize_point_set(c);
        CHECK(set.size() == 64);
    }
    SUBCASE("model set via named basis") {
        const auto c = parse_config(R"({
            "generator": {"kind": "model_set", "basis": "fibonacci",
                          "window": [-0.5, 0.5], "R": 200}
        })");
        const auto set = realize_point_set(c);
        CHECK(set.size() > 80);
        CHECK(set.has_lattice_coords());
    }
    SUBCASE("translate averaging requires a seed") {
        CHECK_THROWS_WITH(parse_config(R"({"translates": 4})"),
                          doctest::Contains("seed"));
    }
    SUBCASE("k grid syntax") {
        CHECK(parse_k_grid("0:1:0.5") == std::vector<double>{0.0, 0.5, 1.0});
        CHECK_THROWS(parse_k_grid("0:1"));
        CHECK_THROWS(parse_k_grid("0:1:0"));
    }
}

TEST_CASE("command bodies write their formats") {
    const std::string dir = "cli_test_tmp_";
    SUBCASE("generate writes a loadable 6-point file at R = 8") {
        ExperimentConfig c = parse_config(
            R"({"generator": {"kind": "periodic4", "R": 8}})");
        c.output_path = dir + "points.txt";
        CHECK(cmd_generate(c) == 0);
        const auto set = load_point_set(c.output_path);
        CHECK(set.size() == 6);
        std::remove(c.output_path.c_str());
    }
    SUBCASE("thue_morse length 1024 writes 1024 points") {
        ExperimentConfig c = parse_config(
            R"({"generator": {"kind": "thue_morse", "length": 1024}})");
        c.output_path = dir + "tm.txt";
        CHECK(cmd_generate(c) == 0);
        const auto set = load_point_set(c.output_path);
        CHECK(set.size() == 1024);
        std::remove(c.output_path.c_str());
    }
    SUBCASE("autocorrelate on a sequence") {
        ExperimentConfig c = parse_config(R"({
            "generator": {"kind": "rudin_shapiro", "length": 4096},
            "domain": "sequence", "weights": [1, -1], "max_lag": 4
        })");
        c.output_path = dir + "rs.csv";
        CHECK(cmd_autocorrelate(c) == 0);
        const auto text = read_text_file(c.output_path);
        CHECK(text.rfind("t,eta\n", 0) == 0);
        std::remove(c.output_path.c_str());
    }
    SUBCASE("diffract with closed form emits the component tag") {
        ExperimentConfig c = parse_config(R"({
            "method": "closed-form", "system": "thue_morse",
            "weights": [1, 0], "k_list": [0, 0.5]
        })");
        c.output_path = dir + "cf.csv";
        CHECK(cmd_diffract(c) == 0);
        const auto text = read_text_file(c.output_path);
        CHECK(text.find("closed-form") != std::string::npos);
        CHECK(text.find("continuous-component: singular") != std::string::npos);
        std::remove(c.output_path.c_str());

        c.format = "json";
        c.output_path = dir + "cf.json";
        CHECK(cmd_diffract(c) == 0);
        const auto parsed = read_text_file(c.output_path);
        CHECK(parsed.find("\"continuous_component\": \"singular\"") !=
              std::string::npos);
        std::remove(c.output_path.c_str());
    }
    SUBCASE("identical configs give byte-identical outputs") {
        ExperimentConfig c = parse_config(R"({
            "generator": {"kind": "model_set", "basis": "fibonacci", "R": 2000},
            "weights": [1], "max_lag": 10, "threads": 1
        })");
        c.output_path = dir + "a.csv";
        CHECK(cmd_autocorrelate(c) == 0);
        auto first = read_text_file(c.output_path);
        c.threads = 3;  // thread count must not change the bytes
        c.output_path = dir + "b.csv";
        CHECK(cmd_autocorrelate(c) == 0);
        CHECK(first == read_text_file(c.output_path));
        std::remove((dir + "a.csv").c_str());
        std::remove((dir + "b.csv").c_str());
    }
}
