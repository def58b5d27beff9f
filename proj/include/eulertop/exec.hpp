#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eulertop {

// Every data-parallel kernel takes an Execution policy. Parallel uses OpenMP;
// Serial is the reference path the tests compare against. Results are
// bitwise identical because each loop iteration writes only its own slot
// (no reductions), so the policy and thread count never change output.
enum class Execution { Serial, Parallel };

template <class F>
inline void for_index(std::size_t n, Execution exec, F&& body) {
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      body(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int k) {
#ifdef _OPENMP
  if (k > 0) omp_set_num_threads(k);
#else
  (void)k;
#endif
}

}  // namespace eulertop
