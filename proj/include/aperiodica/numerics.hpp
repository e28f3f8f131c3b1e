#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace aperiodica {

/// Matching tolerance for positions and displacement clustering.
/// Far below any geometric gap in sets with finite local complexity.
inline constexpr double kMatchTol = 1e-9;

/// Compensated (Kahan) accumulator for long window averages.
class KahanSum {
public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Kahan-compensated complex accumulator (independent real/imag parts).
class KahanComplexSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_;
    KahanSum im_;
};

inline std::int64_t quantize(double x, double cell = kMatchTol) {
    return static_cast<std::int64_t>(std::llround(x / cell));
}

inline bool nearly_equal(double a, double b, double tol = kMatchTol) {
    return std::abs(a - b) <= tol;
}

/// e^{2*pi*i*phase} with the sign carried by `phase`.
inline std::complex<double> unit_phase(double phase) {
    const double a = 2.0 * M_PI * phase;
    return {std::cos(a), std::sin(a)};
}

/// Solves A c = d by Gaussian elimination with partial pivoting.
/// A is row-major n x n and is consumed. Throws on singularity.
std::vector<double> solve_linear_system(std::vector<double> a,
                                        std::vector<double> d, int n);

}  // namespace aperiodica

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace aperiodica {

inline std::vector<double> solve_linear_system(std::vector<double> a,
                                               std::vector<double> d, int n) {
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row)
            if (std::abs(a[row * n + col]) > std::abs(a[pivot * n + col]))
                pivot = row;
        if (std::abs(a[pivot * n + col]) < 1e-300)
            throw std::invalid_argument("singular linear system");
        if (pivot != col) {
            for (int j = 0; j < n; ++j)
                std::swap(a[col * n + j], a[pivot * n + j]);
            std::swap(d[col], d[pivot]);
        }
        for (int row = col + 1; row < n; ++row) {
            const double factor = a[row * n + col] / a[col * n + col];
            a[row * n + col] = 0.0;
            for (int j = col + 1; j < n; ++j)
                a[row * n + j] -= factor * a[col * n + j];
            d[row] -= factor * d[col];
        }
    }
    std::vector<double> c(n);
    for (int row = n - 1; row >= 0; --row) {
        double s = d[row];
        for (int j = row + 1; j < n; ++j) s -= a[row * n + j] * c[j];
        c[row] = s / a[row * n + row];
    }
    return c;
}

}  // namespace aperiodica
