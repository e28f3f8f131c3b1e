#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "aperiodica/generators.hpp"
#include "aperiodica/sequence.hpp"
#include "oracles.hpp"

using namespace aperiodica;

namespace {

std::string letters(const SequenceWindow& seq) {
    std::string s;
    for (int c : seq.symbols) s.push_back(static_cast<char>('a' + c - 1));
    return s;
}

}  // namespace

TEST_CASE("substitution fixed points") {
    SUBCASE("Thue-Morse prefix of length 16") {
        const auto seq = substitution_fixed_point(thue_morse_system(), 16);
        CHECK(letters(seq) == "abbabaabbaababba");
        CHECK(seq.first_index == -8);
    }
    SUBCASE("Thue-Morse matches the digit-parity definition") {
        const auto seq = substitution_fixed_point(thue_morse_system(), 1 << 12);
        for (std::int64_t n = 0; n < seq.size(); ++n)
            CHECK(seq.symbols[static_cast<std::size_t>(n)] ==
                  oracles::thue_morse_letter(static_cast<std::uint64_t>(n)));
    }
    SUBCASE("Rudin-Shapiro first four letters") {
        const auto seq = substitution_fixed_point(rudin_shapiro_system(), 4);
        // alphabet 1, 2, 1bar, 2bar encoded 1..4
        CHECK(seq.symbols == std::vector<int>{1, 4, 1, 2});
    }
    SUBCASE("one-letter rule gives a constant sequence") {
        SubstitutionSystem constant{1, {{1}}, {1.0}, 1};
        const auto seq = substitution_fixed_point(constant, 7);
        CHECK(seq.size() == 7);
        for (int c : seq.symbols) CHECK(c == 1);
    }
    SUBCASE("seed must be self-prolongable") {
        SubstitutionSystem bad{2, {{2, 1}, {1, 2}}, {1.0, 1.0}, 1};
        CHECK_THROWS_WITH(substitution_fixed_point(bad, 8),
                          doctest::Contains("self-prolongable"));
    }
    SUBCASE("non-primitive systems are rejected") {
        SubstitutionSystem split{2, {{1, 1}, {2, 2}}, {1.0, 1.0}, 1};
        CHECK_THROWS_WITH(substitution_fixed_point(split, 8),
                          doctest::Contains("primitive"));
    }
    SUBCASE("applying the rules reproduces a longer prefix") {
        const auto sys = thue_morse_system();
        const auto seq = substitution_fixed_point(sys, 256);
        std::vector<int> rewritten;
        for (int c : seq.symbols)
            for (int image : sys.rules[c - 1]) rewritten.push_back(image);
        const auto longer = substitution_fixed_point(sys, 512);
        rewritten.resize(longer.symbols.size());
        CHECK(rewritten == longer.symbols);
    }
    SUBCASE("Thue-Morse letter frequencies approach 1/2") {
        const auto seq = substitution_fixed_point(thue_morse_system(), 1 << 14);
        const double n = static_cast<double>(seq.size());
        const double a_count = static_cast<double>(
            std::count(seq.symbols.begin(), seq.symbols.end(), 1));
        CHECK(std::abs(a_count / n - 0.5) <= 2.0 / n);
    }
}

TEST_CASE("Rudin-Shapiro reduction") {
    SUBCASE("printed example") {
        SequenceWindow seq4{4, {1, 4, 1, 2}, 0};
        CHECK(letters(reduce_rudin_shapiro(seq4)) == "abaa");
    }
    SUBCASE("all-unbarred input maps to all a") {
        SequenceWindow seq4{4, {1, 2, 2, 1}, 0};
        CHECK(letters(reduce_rudin_shapiro(seq4)) == "aaaa");
    }
    SUBCASE("empty window stays empty") {
        SequenceWindow seq4{4, {}, 0};
        CHECK(reduce_rudin_shapiro(seq4).symbols.empty());
    }
    SUBCASE("reduced sequence is the classic sign sequence times (-1)^n") {
        const auto seq4 = substitution_fixed_point(rudin_shapiro_system(), 1 << 12);
        const auto seq = reduce_rudin_shapiro(seq4);
        for (std::int64_t n = 0; n < seq.size(); ++n) {
            const int sign = seq.symbols[static_cast<std::size_t>(n)] == 1 ? 1 : -1;
            const int parity = (n % 2 == 0) ? 1 : -1;
            CHECK(sign == parity * oracles::rudin_shapiro_sign(
                                       static_cast<std::uint64_t>(n)));
        }
    }
}

TEST_CASE("tile length normalization") {
    auto sys = thue_morse_system();
    sys.tile_lengths = {2.0, 2.0};
    const auto norm = normalized_tile_lengths(sys);
    CHECK(norm[0] == doctest::Approx(1.0));
    CHECK(norm[1] == doctest::Approx(1.0));

    // rule 1 -> 112, 2 -> 12: golden-ratio letter frequencies 1/tau, 1/tau^2
    SubstitutionSystem skew{2, {{1, 1, 2}, {1, 2}}, {1.0, 1.0}, 1};
    const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
    const auto freq = letter_frequencies(skew);
    CHECK(freq[0] == doctest::Approx(1.0 / tau).epsilon(1e-10));
    CHECK(freq[1] == doctest::Approx(1.0 / (tau * tau)).epsilon(1e-10));
}

TEST_CASE("suspension") {
    SUBCASE("unit tiles place the window on consecutive integers") {
        const auto seq = sequence_from_string("abba", 2);
        const auto set = suspend(seq, {1.0, 1.0});
        REQUIRE(set.size() == 4);
        CHECK(set.coords == std::vector<double>{0.0, 1.0, 2.0, 3.0});
        CHECK(set.colors == std::vector<int>{1, 2, 2, 1});
        CHECK(set.separation == 0.5);
    }
    SUBCASE("cumulative sums respect per-color lengths") {
        const auto seq = sequence_from_string("ab", 2);
        const auto set = suspend(seq, {1.0, 2.0});
        CHECK(set.coords == std::vector<double>{0.0, 1.0});
        // the b tile ends at 3, so a centered continuation would start there
    }
    SUBCASE("offset translates every position") {
        const auto seq = sequence_from_string("abba", 2);
        const auto base = suspend(seq, {1.0, 1.0}, 0.0);
        const auto moved = suspend(seq, {1.0, 1.0}, 0.5);
        REQUIRE(base.size() == moved.size());
        for (std::size_t i = 0; i < base.size(); ++i)
            CHECK(moved.coords[i] == base.coords[i] + 0.5);
    }
    SUBCASE("centered windows keep every point") {
        const auto seq = substitution_fixed_point(thue_morse_system(), 1 << 10);
        const auto set = suspend(seq, {1.0, 1.0});
        CHECK(set.size() == 1024);
        CHECK(set.window_radius == 1024.0);
        CHECK(validate_uniform_discreteness(set));
    }
    SUBCASE("negative indices accumulate backwards") {
        SequenceWindow seq{2, {1, 2, 1, 2}, -2};  // symbols at -2..1
        const auto set = suspend(seq, {1.0, 3.0});
        // boundaries: S_{-2} = -4, S_{-1} = -3, S_0 = 0, S_1 = 1; tiles end at 4
        REQUIRE(set.size() == 4);
        CHECK(set.coords == std::vector<double>{-4.0, -3.0, 0.0, 1.0});
    }
}

TEST_CASE("periodic example") {
    SUBCASE("window of edge 8 holds the six printed points") {
        const auto set = periodic_example(8.0);
        REQUIRE(set.size() == 6);
        CHECK(set.coords == std::vector<double>{-4, -2, -1, 0, 2, 3});
        CHECK(set.colors == std::vector<int>{1, 1, 2, 1, 1, 2});
    }
    SUBCASE("every residue lies in {0,2,3}") {
        const auto set = periodic_example(1000.0);
        for (double x : set.coords) {
            const auto r = ((static_cast<std::int64_t>(std::llround(x)) % 4) + 4) % 4;
            CHECK((r == 0 || r == 2 || r == 3));
        }
    }
    SUBCASE("a full period window of length 4L holds 3L points") {
        for (std::int64_t L : {2, 10, 25}) {
            const auto set = periodic_example(static_cast<double>(4 * L));
            CHECK(set.size() == static_cast<std::size_t>(3 * L));
        }
    }
}

TEST_CASE("model sets") {
    SUBCASE("identity scheme with the unit window is the integer lattice") {
        CutProjectScheme square;
        const auto set = model_set(square, 100.0);
        REQUIRE(set.size() == 100);
        for (std::size_t i = 0; i < set.size(); ++i) {
            CHECK(set.coords[i] == std::round(set.coords[i]));
            CHECK(set.lattice[i][1] == 0);
        }
    }
    SUBCASE("empty window gives an empty set") {
        auto scheme = fibonacci_scheme();
        scheme.scale = 0.0;
        CHECK(model_set(scheme, 100.0).empty());
    }
    SUBCASE("degenerate basis is rejected") {
        CutProjectScheme bad;
        bad.basis = {{{1.0, 2.0}, {2.0, 4.0}}};
        CHECK_THROWS(model_set(bad, 10.0));
    }
    SUBCASE("golden-ratio scheme density matches window over covolume") {
        const auto set = model_set(fibonacci_scheme(), 20000.0);
        const double density = static_cast<double>(set.size()) / 20000.0;
        CHECK(std::abs(density - 1.0 / std::sqrt(5.0)) <= 2e-3);
    }
    SUBCASE("uniform discreteness with the observed minimal gap") {
        const auto set = model_set(fibonacci_scheme(), 5000.0);
        CHECK(validate_uniform_discreteness(set));
        // the minimal gap stabilizes as the window grows
        const auto larger = model_set(fibonacci_scheme(), 10000.0);
        CHECK(set.separation == doctest::Approx(larger.separation).epsilon(1e-9));
    }
    SUBCASE("interval windows give at most three distinct gaps") {
        const auto set = model_set(fibonacci_scheme(), 5000.0);
        std::set<std::int64_t> gaps;
        for (std::size_t i = 1; i < set.size(); ++i)
            gaps.insert(std::llround((set.coords[i] - set.coords[i - 1]) * 1e9));
        CHECK(gaps.size() <= 3);
    }
    SUBCASE("exact lattice coordinates reproduce the positions") {
        const auto scheme = fibonacci_scheme();
        const auto set = model_set(scheme, 1000.0);
        for (std::size_t i = 0; i < set.size(); ++i) {
            const auto [n, m] = set.lattice[i];
            CHECK(set.coords[i] == doctest::Approx(scheme.physical(n, m)).epsilon(1e-12));
        }
    }
}
