#include <doctest.h>

#include <cmath>

#include "aperiodica/analysis.hpp"
#include "aperiodica/generators.hpp"
#include "oracles.hpp"

using namespace aperiodica;

TEST_CASE("almost periods") {
    const auto flat = flatten(periodic_example(2000.0));
    const auto ac = autocorrelation(flat, {{1.0}}, 20.0);
    SUBCASE("multiples of the period qualify at small epsilon") {
        const auto periods = almost_periods(ac, 0.01);
        REQUIRE_FALSE(periods.empty());
        for (double t : periods) {
            const auto z = std::llround(t);
            CHECK(z % 4 == 0);
        }
        // every multiple of 4 within the lag window shows up
        int count = 0;
        for (double t : periods)
            if (t >= 0) ++count;
        CHECK(count == 6);  // 0, 4, 8, 12, 16, 20
    }
    SUBCASE("huge epsilon admits the whole support") {
        CHECK(almost_periods(ac, 10.0).size() == ac.size());
    }
    SUBCASE("epsilon must be positive") {
        CHECK_THROWS(almost_periods(ac, 0.0));
    }
}

TEST_CASE("peak listing") {
    const auto flat = periodic_example(4000.0);
    const WeightSystem w{{1.0, 1.0}};
    std::vector<std::vector<double>> kk = {{0.0}, {0.25}, {0.5}, {0.75}};
    const auto diff = exponential_sum_diffraction(flat, w, kk);
    SUBCASE("threshold 0.05 keeps all four peaks") {
        CHECK(bragg_peaks_above(diff, 0.05).size() == 4);
    }
    SUBCASE("threshold 0.5 keeps only the central peak") {
        const auto peaks = bragg_peaks_above(diff, 0.5);
        REQUIRE(peaks.size() == 1);
        CHECK(peaks[0] == 0.0);
    }
    SUBCASE("threshold above the maximum keeps nothing") {
        CHECK(bragg_peaks_above(diff, 1.0).empty());
    }
}

TEST_CASE("the bound linking correlation, diffraction, and characters") {
    SUBCASE("periodic example: exact periods force quarter-integer characters") {
        const auto flat = flatten(periodic_example(4000.0));
        const WeightSystem w{{1.0}};
        const auto ac = autocorrelation(flat, w, 8.0);
        std::vector<double> k_set;
        for (int j = 0; j < 20; ++j) k_set.push_back(0.05 * j);
        std::vector<std::vector<double>> kk;
        for (double k : k_set) kk.push_back({k});
        const auto diff = exponential_sum_diffraction(flat, w, kk);
        const auto report = verify_inequality(ac, diff, k_set,
                                              {0, 1, 2, 3, 4, 5, 6, 7, 8}, 1e-2);
        CHECK(report.all_pass());
        // at an exact period the right side vanishes
        bool saw_tight = false;
        for (const auto& row : report.rows)
            if (row.t == 4.0 && row.k == 0.25) {
                CHECK(std::abs(row.rhs) <= 1e-6);
                CHECK(row.lhs <= 1e-6);
                saw_tight = true;
            }
        CHECK(saw_tight);
    }
    SUBCASE("zero intensity makes the left side vanish") {
        const auto flat = flatten(periodic_example(1000.0));
        const WeightSystem w{{1.0}};
        const auto ac = autocorrelation(flat, w, 8.0);
        DiffractionEstimate diff;
        diff.dimension = 1;
        diff.weight_system = w;
        diff.source_id = ac.source_id;
        diff.wavevectors = {0.123};
        diff.intensities = {0.0};
        const auto report = verify_inequality(ac, diff, {0.123}, {1.0}, 1e-2);
        CHECK(report.rows[0].lhs == 0.0);
        CHECK(report.rows[0].pass);
    }
    SUBCASE("weighted inputs are refused") {
        const auto set = periodic_example(1000.0);
        const WeightSystem w{{1.0, 2.0}};
        const auto ac = autocorrelation(set, w, 8.0);
        DiffractionEstimate diff;
        diff.dimension = 1;
        diff.weight_system = w;
        CHECK_THROWS_WITH(verify_inequality(ac, diff, {0.0}, {0.0}, 1e-2),
                          doctest::Contains("weight-1"));
    }
    SUBCASE("mismatched sources are refused") {
        const auto a = flatten(periodic_example(1000.0));
        const auto b = flatten(periodic_example(2000.0));
        const WeightSystem w{{1.0}};
        const auto ac = autocorrelation(a, w, 8.0);
        const auto diff = exponential_sum_diffraction(b, w, {{0.25}});
        CHECK_THROWS_WITH(verify_inequality(ac, diff, {0.25}, {0.0}, 1e-2),
                          doctest::Contains("different point sets"));
    }
    SUBCASE("bounds on both sides of the inequality") {
        const auto flat = flatten(periodic_example(4000.0));
        const WeightSystem w{{1.0}};
        const auto ac = autocorrelation(flat, w, 12.0);
        std::vector<double> k_set = {0.0, 0.25, 0.4, 0.5};
        std::vector<std::vector<double>> kk;
        for (double k : k_set) kk.push_back({k});
        const auto diff = exponential_sum_diffraction(flat, w, kk);
        const auto report =
            verify_inequality(ac, diff, k_set, {0, 1, 2, 3, 4}, 1e-2);
        const double eta0 = ac.at_zero();
        for (const auto& row : report.rows) {
            CHECK(row.lhs <= 2.0 * std::sqrt(eta0) + 1e-9);
            CHECK(row.rhs <= 2.0 * eta0 + 1e-9);
        }
    }
}
