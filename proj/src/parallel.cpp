#include "covelm/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace covelm {

void apply_thread_cap_from_env() {
#ifdef _OPENMP
    const char* v = std::getenv("COVELM_THREADS");
    if (!v) return;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (end && *end == '\0' && n > 0) omp_set_num_threads(static_cast<int>(n));
#endif
}

}  // namespace covelm
