#include "aperiodica/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace aperiodica {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("APERIODICA_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (...) {
            // fall through to the OpenMP default
        }
    }
    return omp_get_max_threads();
}

}  // namespace aperiodica
