#include <doctest.h>

#include <cmath>

#include "aperiodica/correlations.hpp"
#include "aperiodica/generators.hpp"
#include "aperiodica/sequence.hpp"
#include "oracles.hpp"

using namespace aperiodica;

namespace {

double eta_at(const AutocorrelationMeasure& ac, double t) {
    return ac.value_at_or_zero(std::span<const double>(&t, 1));
}

ColoredPointSet integer_lattice(double R) {
    std::vector<ColoredPoint> pts;
    for (std::int64_t z = static_cast<std::int64_t>(std::ceil(-R / 2));
         z < static_cast<std::int64_t>(std::ceil(R / 2)); ++z)
        pts.push_back({{static_cast<double>(z)}, 1});
    return make_point_set(1, 1, 1.0, R, std::move(pts));
}

}  // namespace

TEST_CASE("autocorrelation of the periodic example") {
    const auto set = periodic_example(4000.0);

    SUBCASE("unit weights match the one-period pair count") {
        const auto ac = autocorrelation(set, {{1.0, 1.0}}, 8.0);
        // frozen from the period oracle: 3/4, 1/2, 1/2, 1/2, then period 4
        const double expected[] = {0.75, 0.5, 0.5, 0.5, 0.75,
                                   0.5,  0.5, 0.5, 0.75};
        for (int t = 0; t <= 8; ++t) {
            CHECK(oracles::period4_eta(1.0, 1.0, t) == expected[t]);
            CHECK(std::abs(eta_at(ac, t) - expected[t]) <= 1e-3);
        }
    }
    SUBCASE("color-a weights keep even lags only") {
        const auto ac = autocorrelation(set, {{1.0, 0.0}}, 8.0);
        const double expected[] = {0.5, 0.0, 0.5, 0.0, 0.5};
        for (int t = 0; t <= 4; ++t) {
            CHECK(oracles::period4_eta(1.0, 0.0, t) == expected[t]);
            CHECK(std::abs(eta_at(ac, t) - expected[t]) <= 1e-3);
        }
    }
    SUBCASE("general weights match the oracle at every computed lag") {
        const auto ac = autocorrelation(set, {{0.7, -1.3}}, 16.0);
        for (std::size_t i = 0; i < ac.size(); ++i) {
            const auto t = std::llround(ac.lags[i]);
            CHECK(std::abs(ac.values[i] - oracles::period4_eta(0.7, -1.3, t)) <=
                  2e-3);
        }
    }
    SUBCASE("rejects lags reaching half the window") {
        CHECK_THROWS_WITH(autocorrelation(set, {{1.0, 1.0}}, 2000.0),
                          doctest::Contains("lag exceeds window"));
    }
}

TEST_CASE("autocorrelation degenerate inputs") {
    SUBCASE("zero lag cutoff keeps only the origin cluster") {
        const auto ac = autocorrelation(periodic_example(100.0), {{1.0, 1.0}}, 0.0);
        REQUIRE(ac.size() == 1);
        CHECK(ac.lags[0] == 0.0);
        CHECK(std::abs(ac.at_zero() - 0.75) <= 0.05);
    }
    SUBCASE("empty set yields an empty measure") {
        const auto empty = make_point_set(1, 2, 1.0, 100.0, {});
        const auto ac = autocorrelation(empty, {{1.0, 1.0}}, 5.0);
        CHECK(ac.size() == 0);
        CHECK(ac.intensity == 0.0);
        CHECK(ac.at_zero() == 0.0);
    }
    SUBCASE("weight length must match the color count") {
        CHECK_THROWS(autocorrelation(periodic_example(100.0), {{1.0}}, 5.0));
    }
}

TEST_CASE("autocorrelation of the integer lattice") {
    const auto ac = autocorrelation(integer_lattice(2000.0), {{1.0}}, 10.0);
    for (int t = -10; t <= 10; ++t)
        CHECK(eta_at(ac, static_cast<double>(t)) == 1.0);
    CHECK(ac.size() == 21);  // integer lags only
}

TEST_CASE("autocorrelation invariants") {
    const auto set = periodic_example(500.0);
    const auto counts = displacement_counts(set, 12.0);

    SUBCASE("symmetry eta(-t) = eta(t) holds exactly") {
        const auto ac = weigh_displacements(counts, {{1.4, -0.6}});
        for (std::size_t i = 0; i < ac.size(); ++i)
            CHECK(eta_at(ac, -ac.lags[i]) == ac.values[i]);
    }
    SUBCASE("power-of-two weight scaling is exact") {
        const auto base = weigh_displacements(counts, {{0.9, 1.7}});
        const auto scaled = weigh_displacements(counts, {{3.6, 6.8}});
        for (std::size_t i = 0; i < base.size(); ++i)
            CHECK(scaled.values[i] == 16.0 * base.values[i]);
    }
    SUBCASE("eta(0) equals the squared-weight intensity mix") {
        const WeightSystem w{{0.8, -1.1}};
        const auto ac = weigh_displacements(counts, w);
        const auto inner = restrict_window(set, ac.inner_radius);
        const auto rep = empirical_intensity(inner, w);
        const double expect =
            0.8 * 0.8 * rep.per_color[0] + 1.1 * 1.1 * rep.per_color[1];
        CHECK(std::abs(ac.at_zero() - expect) <= 1e-9);
    }
    SUBCASE("support displacements are point differences") {
        const auto ac = weigh_displacements(counts, {{1.0, 1.0}});
        for (std::size_t i = 0; i < ac.size(); ++i) {
            const double t = ac.lags[i];
            CHECK(std::abs(t - std::round(t)) <= 1e-9);  // integer set
        }
    }
}

TEST_CASE("autocorrelation uses exact lattice keys for model sets") {
    const auto set = model_set(fibonacci_scheme(), 4000.0);
    const auto ac = autocorrelation(set, {{1.0}}, 10.0);
    CHECK(ac.size() > 10);
    CHECK(eta_at(ac, 0.0) > 0.0);
    // displacements of a cut-and-project set lie in the difference set:
    // every lag reproduces as an integer combination n + m tau
    const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
    for (std::size_t i = 0; i < ac.size(); ++i) {
        const double t = ac.lags[i];
        bool representable = false;
        for (int m = -40; m <= 40 && !representable; ++m) {
            const double n = t - m * tau;
            representable = std::abs(n - std::round(n)) <= 1e-6;
        }
        CHECK(representable);
    }
}

TEST_CASE("sequence autocorrelation") {
    SUBCASE("all-ones weights give eta = 1 exactly") {
        const auto seq = substitution_fixed_point(thue_morse_system(), 1 << 12);
        const auto ac = sequence_autocorrelation(seq, {{1.0, 1.0}}, 16);
        for (int k = -16; k <= 16; ++k)
            CHECK(eta_at(ac, static_cast<double>(k)) == 1.0);
    }
    SUBCASE("Thue-Morse signed correlation at lag 1 approaches -1/3") {
        const auto seq = substitution_fixed_point(thue_morse_system(), 1 << 20);
        const auto ac = sequence_autocorrelation(seq, {{1.0, -1.0}}, 2);
        const double direct = oracles::direct_sign_correlation(
            [](std::uint64_t n) {
                return oracles::thue_morse_letter(n) == 1 ? 1 : -1;
            },
            1 << 20, 1);
        CHECK(std::abs(eta_at(ac, 1.0) - direct) <= 1e-9);
        CHECK(std::abs(eta_at(ac, 1.0) + 1.0 / 3.0) <= 1e-3);
    }
    SUBCASE("Rudin-Shapiro signed correlations vanish") {
        const auto seq = reduce_rudin_shapiro(
            substitution_fixed_point(rudin_shapiro_system(), 1 << 20));
        const auto ac = sequence_autocorrelation(seq, {{1.0, -1.0}}, 8);
        for (int k = 1; k <= 8; ++k)
            CHECK(std::abs(eta_at(ac, static_cast<double>(k))) <= 5e-3);
    }
    SUBCASE("lags beyond half the window are refused") {
        const auto seq = sequence_from_string("abab", 2);
        CHECK_THROWS_WITH(sequence_autocorrelation(seq, {{1.0, 1.0}}, 2),
                          doctest::Contains("max_k too large"));
    }
}

TEST_CASE("n-point correlations") {
    const auto set = periodic_example(4000.0);
    const WeightSystem w{{1.0, 1.0}};

    SUBCASE("triple at (2,4) matches the period oracle") {
        CHECK(oracles::period4_triple(1.0, 1.0, 2, 4) == 0.5);
        const auto tensor = npoint_correlation(set, w, {{2.0, 4.0}}, 2);
        CHECK(std::abs(tensor.values[0] - 0.5) <= 1e-3);
    }
    SUBCASE("order 1 reproduces the autocorrelation bit for bit") {
        // on the canonical (nonnegative) support; the autocorrelation's
        // negative side is defined by symmetrization
        const auto ac = autocorrelation(set, {{0.6, 1.9}}, 8.0);
        std::vector<std::vector<double>> tuples;
        std::vector<double> expected;
        for (std::size_t i = 0; i < ac.size(); ++i) {
            if (ac.lags[i] < 0.0) continue;
            tuples.push_back({ac.lags[i]});
            expected.push_back(ac.values[i]);
        }
        const auto tensor = npoint_correlation(set, {{0.6, 1.9}}, tuples, 1, 0,
                                               ac.max_lag);
        REQUIRE(tensor.values.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i)
            CHECK(tensor.values[i] == expected[i]);
        // the mirrored side agrees to estimator accuracy
        const double neg = -1.0;
        const auto mirrored =
            npoint_correlation(set, {{0.6, 1.9}}, {{neg}}, 1, 0, ac.max_lag);
        CHECK(std::abs(mirrored.values[0] -
                       ac.value_at_or_zero(std::span<const double>(&neg, 1))) <=
              1e-3);
    }
    SUBCASE("integer lattice tuples all give 1") {
        const auto lattice = integer_lattice(1000.0);
        const auto tensor = npoint_correlation(lattice, {{1.0}},
                                               {{1.0, 2.0}, {3.0, 7.0}}, 2);
        CHECK(tensor.values[0] == 1.0);
        CHECK(tensor.values[1] == 1.0);
    }
    SUBCASE("value at the zero tuple is the cubed-weight intensity mix") {
        const WeightSystem mixed{{1.3, -0.4}};
        const auto tensor =
            npoint_correlation(set, mixed, {{0.0, 0.0}}, 2, 0, 4.0);
        const auto inner = restrict_window(set, tensor.inner_radius);
        const auto rep = empirical_intensity(inner, mixed);
        const double expect = std::pow(1.3, 3) * rep.per_color[0] +
                              std::pow(-0.4, 3) * rep.per_color[1];
        CHECK(std::abs(tensor.values[0] - expect) <= 1e-9);
    }
    SUBCASE("oversized displacements are refused") {
        CHECK_THROWS_WITH(npoint_correlation(set, w, {{3000.0, 1.0}}, 2),
                          doctest::Contains("lag overflow"));
    }
}

TEST_CASE("pattern frequencies") {
    const auto set = periodic_example(4000.0);
    SUBCASE("single color-a anchor has frequency 1/2") {
        const double f = pattern_frequency(set, {{{{0.0}, 1}}, 0.1, false});
        CHECK(std::abs(f - 0.5) <= 1e-3);
    }
    SUBCASE("a at 0 and b at 1 has frequency 1/4") {
        const double f =
            pattern_frequency(set, {{{{0.0}, 1}, {{1.0}, 2}}, 0.1, false});
        CHECK(std::abs(f - 0.25) <= 1e-3);
    }
    SUBCASE("open versus closed quarter-shift dichotomy on the lattice") {
        CutProjectScheme square;
        const auto lattice = model_set(square, 2000.0);
        const Pattern open{{{{0.0}, 1}, {{0.25}, 1}}, 0.25, false};
        Pattern closed = open;
        closed.closed = true;
        CHECK(pattern_frequency(lattice, open) == 0.0);
        CHECK(std::abs(pattern_frequency(lattice, closed) - 1.0) <= 1e-3);
    }
    SUBCASE("patterns must anchor the origin and fit the window") {
        CHECK_THROWS(pattern_frequency(set, {{{{1.0}, 1}}, 0.1, false}));
        CHECK_THROWS_WITH(
            pattern_frequency(set, {{{{0.0}, 1}, {{1500.0}, 1}}, 0.1, false}),
            doctest::Contains("pattern too large"));
    }
}

TEST_CASE("two-dimensional lattice sanity") {
    std::vector<ColoredPoint> pts;
    for (int i = -8; i < 8; ++i)
        for (int j = -8; j < 8; ++j)
            pts.push_back({{static_cast<double>(i), static_cast<double>(j)}, 1});
    const auto set = make_point_set(2, 1, 1.0, 16.0, std::move(pts));
    CHECK(validate_uniform_discreteness(set));
    CHECK(empirical_intensity(set, {{1.0}}).per_color[0] == 1.0);
    CHECK(count(set, indicator_box({0.0, 0.0}, {3.0, 3.0}), {{1.0}}) == 9.0);

    const auto ac = autocorrelation(set, {{1.0}}, 2.0);
    CHECK(ac.size() == 25);  // integer vectors with max-norm <= 2
    for (std::vector<double> t :
         {std::vector<double>{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {-1.0, 1.0},
          {2.0, -2.0}})
        CHECK(ac.value_at_or_zero(t) == 1.0);

    const auto tensor =
        npoint_correlation(set, {{1.0}}, {{1.0, 0.0, 0.0, 1.0}}, 2);
    CHECK(tensor.values[0] == 1.0);

    // every eligible point matches its diagonal partner: the frequency is the
    // lattice count of the eroded window (13^2 points) over its volume 13.5^2
    const Pattern corner{{{{0.0, 0.0}, 1}, {{1.0, 1.0}, 1}}, 0.25, false};
    CHECK(pattern_frequency(set, corner) ==
          doctest::Approx(169.0 / 182.25).epsilon(1e-12));
}

TEST_CASE("color intensity unmixing") {
    SUBCASE("two colors") {
        const auto c = solve_color_intensities({1.0, 1.5}, {{1.0, 2.0}});
        CHECK(c[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(c[1] == doctest::Approx(0.25).epsilon(1e-12));
    }
    SUBCASE("one color") {
        const auto c = solve_color_intensities({0.75}, {{3.0}});
        CHECK(c[0] == doctest::Approx(0.25).epsilon(1e-12));
    }
    SUBCASE("repeated or zero weights are singular") {
        CHECK_THROWS_WITH(solve_color_intensities({1.0, 1.0}, {{1.0, 1.0}}),
                          doctest::Contains("singular weight system"));
        CHECK_THROWS_WITH(solve_color_intensities({1.0, 1.0}, {{0.0, 2.0}}),
                          doctest::Contains("singular weight system"));
    }
    SUBCASE("round trip through the forward moments") {
        const WeightSystem w{{1.0, -2.0, 0.5}};
        const std::vector<double> c{0.2, 0.7, 1.9};
        const auto back = solve_color_intensities(diagonal_moments_from(c, w), w);
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(back[i] - c[i]) <= 1e-10);
    }
}
