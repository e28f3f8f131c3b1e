#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace aperiodica {

/// A finite window of a bi-infinite symbolic sequence. Symbol i of the
/// sequence sits at vector index (i - first_index). Windows produced by
/// substitution iteration are centered (first_index = -len/2); ad-hoc windows
/// built from strings start at index 0.
struct SequenceWindow {
    int num_colors = 1;
    std::vector<int> symbols;
    std::int64_t first_index = 0;

    std::int64_t size() const { return static_cast<std::int64_t>(symbols.size()); }
    std::int64_t last_index() const { return first_index + size() - 1; }
    int at(std::int64_t index) const { return symbols[index - first_index]; }
};

/// Primitive substitution on the alphabet 1..m with per-color tile lengths.
struct SubstitutionSystem {
    int alphabet_size = 0;
    std::vector<std::vector<int>> rules;  // rules[c-1] = image word of color c
    std::vector<double> tile_lengths;
    int seed = 1;
};

/// Every rule nonempty, symbols in range, lengths positive, system primitive
/// (some power of the occurrence matrix is strictly positive). Throws with a
/// reason otherwise.
void validate_substitution(const SubstitutionSystem& system);

bool is_primitive(const SubstitutionSystem& system);

/// Asymptotic letter frequencies of the fixed point (Perron eigenvector of
/// the transposed occurrence matrix, by power iteration).
std::vector<double> letter_frequencies(const SubstitutionSystem& system);

/// Tile lengths rescaled so the mean tile length (sum of L_c times the
/// frequency of c) equals 1.
std::vector<double> normalized_tile_lengths(const SubstitutionSystem& system);

/// Prefix of the one-sided fixed point starting at the seed, of length
/// >= min_length, returned as a centered window. Requires the seed rule to
/// begin with the seed letter. Generation uses block memoization per
/// (letter, generation) pair.
SequenceWindow substitution_fixed_point(const SubstitutionSystem& system,
                                        std::int64_t min_length);

/// Two-letter reduction of the 4-letter Rudin-Shapiro alphabet:
/// un-barred letters {1,2} -> a, barred letters {3,4} -> b.
SequenceWindow reduce_rudin_shapiro(const SequenceWindow& seq4);

SubstitutionSystem thue_morse_system();
SubstitutionSystem rudin_shapiro_system();  // 4-letter alphabet 1,2,1bar,2bar

/// Window from a string over letters 'a','b',... indexed from 0.
SequenceWindow sequence_from_string(const std::string& letters, int num_colors);

}  // namespace aperiodica
