#pragma once

#include <cstdint>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace austere {

#ifdef _OPENMP
inline int max_threads() { return omp_get_max_threads(); }
#else
inline int max_threads() { return 1; }
#endif

// Runs body(i) for i in [0, count). threads == 1 is the serial reference
// path; threads == 0 picks the OpenMP default. Bodies must write only to
// per-index slots (reductions happen afterwards, serially), which makes the
// parallel and serial paths produce identical results.
template <typename Body>
void parallel_for(std::int64_t count, const Body& body, int threads = 0) {
#ifdef _OPENMP
  if (threads != 1) {
    if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
#else
  (void)threads;
#endif
  for (std::int64_t i = 0; i < count; ++i) body(i);
}

}  // namespace austere
