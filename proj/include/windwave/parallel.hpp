#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace windwave {

enum class Exec { Serial, Parallel };

/// Run fn(i) for i in [0, n). Parallel policy uses OpenMP when compiled in;
/// iterations must be independent and write disjoint outputs so results are
/// identical across policies and thread counts.
template <typename Fn>
void parallel_for(std::ptrdiff_t n, Fn&& fn, Exec exec = Exec::Parallel) {
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
        return;
    }
#else
    (void)exec;
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
}

inline void set_num_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace windwave
