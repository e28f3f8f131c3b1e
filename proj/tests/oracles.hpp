#pragma once

// Test-only oracles, independent of the library implementations they check.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracles {

/// One period of the two-color period-4 set: color a (1) at residues 0 and 2,
/// color b (2) at residue 3. Returns the weight of the occupant, 0 if empty.
inline double period4_weight(double wa, double wb, std::int64_t z) {
    const std::int64_t r = ((z % 4) + 4) % 4;
    if (r == 0 || r == 2) return wa;
    if (r == 3) return wb;
    return 0.0;
}

/// Brute-force pair correlation over one period.
inline double period4_eta(double wa, double wb, std::int64_t t) {
    double sum = 0.0;
    for (std::int64_t x : {0, 2, 3})
        sum += period4_weight(wa, wb, x) * period4_weight(wa, wb, x + t);
    return sum / 4.0;
}

/// Squared period amplitude |(1/4) sum over the period of w(x) e^{-2 pi i k x}|^2.
inline double period4_intensity(double wa, double wb, double k) {
    std::complex<double> amp = 0.0;
    for (std::int64_t x : {0, 2, 3}) {
        const double angle = -2.0 * M_PI * k * static_cast<double>(x);
        amp += period4_weight(wa, wb, x) *
               std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return std::norm(amp / 4.0);
}

/// Three-point value over one period: x, x+t1, x+t2 all occupied.
inline double period4_triple(double wa, double wb, std::int64_t t1,
                             std::int64_t t2) {
    double sum = 0.0;
    for (std::int64_t x : {0, 2, 3})
        sum += period4_weight(wa, wb, x) * period4_weight(wa, wb, x + t1) *
               period4_weight(wa, wb, x + t2);
    return sum / 4.0;
}

/// Thue-Morse by binary digit parity: letter 1 at even parity (the fixed
/// point of 1 -> 12, 2 -> 21 starting from 1).
inline int thue_morse_letter(std::uint64_t n) {
    return (std::popcount(n) % 2 == 0) ? 1 : 2;
}

/// Classic Rudin-Shapiro signs via the count of adjacent 11 bit pairs.
inline int rudin_shapiro_sign(std::uint64_t n) {
    const int pairs = std::popcount(n & (n >> 1));
    return (pairs % 2 == 0) ? 1 : -1;
}

/// Direct correlation sum over a +/-1 sequence given by sign(n).
template <typename SignFn>
double direct_sign_correlation(SignFn&& sign, std::uint64_t length,
                               std::uint64_t lag) {
    double sum = 0.0;
    for (std::uint64_t i = 0; i + lag < length; ++i)
        sum += static_cast<double>(sign(i)) * static_cast<double>(sign(i + lag));
    return sum / static_cast<double>(length - lag);
}

}  // namespace oracles
