#pragma once

// OpenMP helpers. Every parallel kernel in the library has a serial
// counterpart with identical results; the serial path is the reference.

#include <omp.h>

#include <cstddef>
#include <cstdlib>
#include <string>

namespace skein {

/// Thread cap taken from SKEIN_VERIFY_THREADS; falls back to the OpenMP default.
inline int thread_budget() {
  if (const char* env = std::getenv("SKEIN_VERIFY_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return omp_get_max_threads();
}

template <class Fn>
void serial_for(std::size_t count, Fn&& fn) {
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

/// fn(i) for i in [0, count) with dynamic scheduling. fn must only write to
/// per-index state.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(thread_budget())
  for (long i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
}

}  // namespace skein
