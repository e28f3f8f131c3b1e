// Side-by-side timing of the serial reference kernels and the OpenMP
// production kernels on a sizable realization.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <vector>

#include "aperiodica/correlations.hpp"
#include "aperiodica/diffraction.hpp"
#include "aperiodica/generators.hpp"
#include "aperiodica/reference.hpp"

using namespace aperiodica;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(
               clock::now().time_since_epoch())
        .count();
}

template <typename F>
double time_ms(F&& f) {
    const double t0 = now_ms();
    f();
    return now_ms() - t0;
}

void report(const char* kernel, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", kernel, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
    const int threads = omp_get_max_threads();
    std::printf("threads: %d\n", threads);
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp",
                "speedup");

    {
        const auto set = periodic_example(8000.0);
        const WeightSystem w{{1.0, 1.0}};
        double checksum = 0.0;
        const double serial = time_ms([&] {
            const auto ref = reference::autocorrelation_1d(set, w, 200.0);
            checksum += ref.begin()->second;
        });
        const double parallel = time_ms([&] {
            const auto ac = autocorrelation(set, w, 200.0, threads);
            checksum += ac.values[0];
        });
        report("autocorrelation", serial, parallel);
        (void)checksum;
    }

    {
        const auto set = model_set(fibonacci_scheme(), 200000.0);
        const WeightSystem w{{1.0}};
        std::vector<std::vector<double>> kk;
        for (int i = 0; i < 64; ++i) kk.push_back({0.02 * i});
        double checksum = 0.0;
        const double serial = time_ms([&] {
            for (const auto& k : kk)
                checksum += std::norm(reference::exponential_sum(set, w, k));
        });
        const double parallel = time_ms([&] {
            const auto est = exponential_sum_diffraction(set, w, kk, threads);
            checksum += est.intensities[0];
        });
        report("exponential sums (64 k)", serial, parallel);
        (void)checksum;
    }

    {
        const auto set = periodic_example(6000.0);
        const Pattern pattern{{{{0.0}, 1}, {{1.0}, 2}, {{2.0}, 1}}, 0.25, false};
        double checksum = 0.0;
        const double serial = time_ms(
            [&] { checksum += reference::pattern_frequency(set, pattern); });
        const double parallel = time_ms(
            [&] { checksum += pattern_frequency(set, pattern, threads); });
        report("pattern frequency", serial, parallel);
        (void)checksum;
    }

    {
        const auto seq = substitution_fixed_point(thue_morse_system(), 1 << 21);
        const WeightSystem w{{1.0, -1.0}};
        double checksum = 0.0;
        const double serial = time_ms([&] {
            for (std::int64_t k = 0; k <= 64; ++k)
                checksum += reference::sequence_eta(seq, w, k);
        });
        const double parallel = time_ms([&] {
            const auto ac = sequence_autocorrelation(seq, w, 64, threads);
            checksum += ac.at_zero();
        });
        report("sequence correlations", serial, parallel);
        (void)checksum;
    }

    return 0;
}
