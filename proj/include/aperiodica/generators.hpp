#pragma once

#include <array>
#include <vector>

#include "aperiodica/point_set.hpp"
#include "aperiodica/sequence.hpp"

namespace aperiodica {

/// Places a symbol window on the line: the symbol at sequence index n lands
/// at t + S_n, where S_0 = 0 and steps accumulate the per-color tile lengths.
/// The window radius is the largest centered cube fully covered by tiles,
/// and the recorded hard-core distance is min(lengths)/2.
ColoredPointSet suspend(const SequenceWindow& seq,
                        const std::vector<double>& lengths, double t = 0.0);

/// Planar cut-and-project data: lattice rows (physical coordinate first),
/// a half-open acceptance interval in internal space, and a window scale.
struct CutProjectScheme {
    std::array<std::array<double, 2>, 2> basis{{{1.0, 0.0}, {0.0, 1.0}}};
    double window_lo = -0.5;
    double window_hi = 0.5;
    double scale = 1.0;

    double determinant() const {
        return basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0];
    }
    double physical(std::int64_t n, std::int64_t m) const {
        return static_cast<double>(n) * basis[0][0] + static_cast<double>(m) * basis[1][0];
    }
    double internal(std::int64_t n, std::int64_t m) const {
        return static_cast<double>(n) * basis[0][1] + static_cast<double>(m) * basis[1][1];
    }
};

void validate_scheme(const CutProjectScheme& scheme);

/// All lattice points whose physical projection lies in [-R/2, R/2) and whose
/// internal projection lies in the scaled half-open window. Enumeration walks
/// the integer box implied by the inverse basis, so it is linear in the
/// output size. Points carry their exact integer lattice coordinates.
ColoredPointSet model_set(const CutProjectScheme& scheme, double R);

/// Two-color periodic set of period 4: color a on residues {0, 2}, color b
/// on residue {3}, intersected with the window.
ColoredPointSet periodic_example(double R);

/// Golden-ratio scheme: rows (1, 1) and (tau, 1 - tau), window [-1/2, 1/2).
CutProjectScheme fibonacci_scheme();

}  // namespace aperiodica
