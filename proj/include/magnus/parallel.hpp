#pragma once

#include <chrono>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace magnus {

// Every parallel kernel also runs in serial mode; tests assert both modes agree
// and tools/bench_kernels compares their timings.
enum class exec { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

inline double wall_time() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

template <typename F>
void par_for(exec mode, std::size_t n, F&& body) {
#ifdef _OPENMP
  if (mode == exec::parallel && n > 1) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

// static-schedule variant for uniform bodies
template <typename F>
void par_for_static(exec mode, std::size_t n, F&& body) {
#ifdef _OPENMP
  if (mode == exec::parallel && n > 1) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace magnus
