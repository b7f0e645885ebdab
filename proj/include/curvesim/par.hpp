#pragma once

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#define CURVESIM_OMP_PARALLEL_FOR _Pragma("omp parallel for schedule(dynamic)")
#else
#define CURVESIM_OMP_PARALLEL_FOR
#endif

namespace curvesim::par {

// Work threshold (coefficient products) below which the parallel
// polynomial product is not worth the fork.
inline constexpr std::size_t kPolyMulCutoff = 4096;

inline std::atomic<bool>& threads_flag() {
    static std::atomic<bool> f{true};
    return f;
}

// Global switch for the OpenMP kernels; the serial reference paths are
// always compiled and used when this is off (or when built without OpenMP).
inline bool threads_enabled() {
#ifdef _OPENMP
    return threads_flag().load(std::memory_order_relaxed);
#else
    return false;
#endif
}

inline void set_threads_enabled(bool on) { threads_flag().store(on, std::memory_order_relaxed); }

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace curvesim::par
