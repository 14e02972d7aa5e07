#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hjs {

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Caps the worker count for subsequent parallel loops. k <= 0 leaves the
/// runtime default untouched.
inline void set_thread_cap(int k) {
#ifdef _OPENMP
    if (k > 0) omp_set_num_threads(k);
#else
    (void)k;
#endif
}

/// Serial reference loop. Kept separate from parallel_for so tests and the
/// benchmark can compare the two paths on identical bodies.
template <class F>
void serial_for(std::ptrdiff_t n, F&& body) {
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

/// OpenMP-parallel loop over [0, n). Each index must write only its own slots;
/// with that contract results are identical to serial_for bit for bit.
/// threads <= 0 uses the runtime default.
template <class F>
void parallel_for(std::ptrdiff_t n, F&& body, int threads = 0) {
#ifdef _OPENMP
    if (threads == 1) {
        serial_for(n, body);
        return;
    }
    if (threads > 0) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    }
#else
    (void)threads;
    serial_for(n, body);
#endif
}

} // namespace hjs
