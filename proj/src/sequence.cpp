#include "aperiodica/sequence.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace aperiodica {

namespace {

std::vector<std::vector<std::int64_t>> occurrence_matrix(
    const SubstitutionSystem& s) {
    const int m = s.alphabet_size;
    std::vector<std::vector<std::int64_t>> a(m, std::vector<std::int64_t>(m, 0));
    for (int c = 1; c <= m; ++c)
        for (int image : s.rules[c - 1]) a[c - 1][image - 1] += 1;
    return a;
}

}  // namespace

bool is_primitive(const SubstitutionSystem& system) {
    const int m = system.alphabet_size;
    auto a = occurrence_matrix(system);
    std::vector<std::vector<bool>> cur(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) cur[i][j] = a[i][j] > 0;
    // Wielandt bound: a primitive m x m boolean matrix turns strictly
    // positive within (m-1)^2 + 1 powers.
    const int limit = (m - 1) * (m - 1) + 1;
    for (int step = 1; step <= limit; ++step) {
        bool all = true;
        for (int i = 0; i < m && all; ++i)
            for (int j = 0; j < m && all; ++j) all = cur[i][j];
        if (all) return true;
        std::vector<std::vector<bool>> next(m, std::vector<bool>(m, false));
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k) {
                if (!cur[i][k]) continue;
                for (int j = 0; j < m; ++j)
                    if (a[k][j] > 0) next[i][j] = true;
            }
        cur.swap(next);
    }
    return false;
}

void validate_substitution(const SubstitutionSystem& system) {
    const int m = system.alphabet_size;
    if (m < 1) throw std::invalid_argument("alphabet must be nonempty");
    if (static_cast<int>(system.rules.size()) != m)
        throw std::invalid_argument("one rule required per letter");
    for (const auto& word : system.rules) {
        if (word.empty()) throw std::invalid_argument("empty rule word");
        for (int c : word)
            if (c < 1 || c > m) throw std::invalid_argument("rule symbol out of range");
    }
    if (static_cast<int>(system.tile_lengths.size()) != m)
        throw std::invalid_argument("one tile length required per letter");
    for (double len : system.tile_lengths)
        if (!(len > 0.0)) throw std::invalid_argument("tile lengths must be positive");
    if (system.seed < 1 || system.seed > m)
        throw std::invalid_argument("seed letter out of range");
    if (!is_primitive(system))
        throw std::invalid_argument("substitution is not primitive");
}

std::vector<double> letter_frequencies(const SubstitutionSystem& system) {
    const int m = system.alphabet_size;
    auto a = occurrence_matrix(system);
    std::vector<double> v(m, 1.0 / m), next(m);
    for (int iter = 0; iter < 200; ++iter) {
        // power iteration on the transpose: next_j = sum_i a[i][j] v_i
        for (int j = 0; j < m; ++j) {
            double s = 0.0;
            for (int i = 0; i < m; ++i) s += static_cast<double>(a[i][j]) * v[i];
            next[j] = s;
        }
        const double total = std::accumulate(next.begin(), next.end(), 0.0);
        double delta = 0.0;
        for (int j = 0; j < m; ++j) {
            next[j] /= total;
            delta = std::max(delta, std::abs(next[j] - v[j]));
        }
        v = next;
        if (delta < 1e-15) break;
    }
    return v;
}

std::vector<double> normalized_tile_lengths(const SubstitutionSystem& system) {
    const auto freq = letter_frequencies(system);
    double mean = 0.0;
    for (int j = 0; j < system.alphabet_size; ++j)
        mean += system.tile_lengths[j] * freq[j];
    std::vector<double> out = system.tile_lengths;
    for (double& len : out) len /= mean;
    return out;
}

SequenceWindow substitution_fixed_point(const SubstitutionSystem& system,
                                        std::int64_t min_length) {
    validate_substitution(system);
    if (min_length < 1) throw std::invalid_argument("min_length must be >= 1");
    const int seed = system.seed;
    const auto& seed_rule = system.rules[seed - 1];
    if (seed_rule.front() != seed)
        throw std::invalid_argument("seed not self-prolongable");

    SequenceWindow out;
    out.num_colors = system.alphabet_size;

    if (seed_rule.size() == 1) {
        // Rule c -> c alone: the fixed point is the constant sequence.
        out.symbols.assign(static_cast<std::size_t>(min_length), seed);
        out.first_index = -(min_length / 2);
        return out;
    }

    // Lengths of letter images per generation, to find the generation at
    // which the seed block reaches min_length.
    const int m = system.alphabet_size;
    std::vector<std::int64_t> len(m, 1);
    int generations = 0;
    while (len[seed - 1] < min_length) {
        std::vector<std::int64_t> next(m, 0);
        for (int c = 1; c <= m; ++c)
            for (int image : system.rules[c - 1]) next[c - 1] += len[image - 1];
        len = next;
        ++generations;
        if (generations > 128)
            throw std::invalid_argument("substitution does not grow");
    }

    // blocks[g][c-1] = image word of letter c after g applications.
    std::vector<std::vector<std::vector<int>>> blocks(generations + 1);
    blocks[0].resize(m);
    for (int c = 1; c <= m; ++c) blocks[0][c - 1] = {c};
    for (int g = 1; g <= generations; ++g) {
        blocks[g].resize(m);
        for (int c = 1; c <= m; ++c) {
            auto& word = blocks[g][c - 1];
            for (int image : system.rules[c - 1]) {
                const auto& sub = blocks[g - 1][image - 1];
                word.insert(word.end(), sub.begin(), sub.end());
            }
        }
    }

    out.symbols = std::move(blocks[generations][seed - 1]);
    out.first_index = -(out.size() / 2);
    return out;
}

SequenceWindow reduce_rudin_shapiro(const SequenceWindow& seq4) {
    if (seq4.num_colors != 4)
        throw std::invalid_argument("expected the 4-letter alphabet");
    SequenceWindow out;
    out.num_colors = 2;
    out.first_index = seq4.first_index;
    out.symbols.reserve(seq4.symbols.size());
    for (int c : seq4.symbols) {
        if (c == 1 || c == 2)
            out.symbols.push_back(1);
        else if (c == 3 || c == 4)
            out.symbols.push_back(2);
        else
            throw std::invalid_argument("unexpected symbol");
    }
    return out;
}

SubstitutionSystem thue_morse_system() {
    return {2, {{1, 2}, {2, 1}}, {1.0, 1.0}, 1};
}

SubstitutionSystem rudin_shapiro_system() {
    // Alphabet 1, 2, 1bar, 2bar encoded as 1, 2, 3, 4.
    return {4, {{1, 4}, {3, 4}, {3, 2}, {1, 2}}, {1.0, 1.0, 1.0, 1.0}, 1};
}

SequenceWindow sequence_from_string(const std::string& letters, int num_colors) {
    SequenceWindow out;
    out.num_colors = num_colors;
    out.first_index = 0;
    for (char ch : letters) {
        const int c = ch - 'a' + 1;
        if (c < 1 || c > num_colors)
            throw std::invalid_argument("letter out of alphabet");
        out.symbols.push_back(c);
    }
    return out;
}

}  // namespace aperiodica
