// Execution policy for the sample loops. The serial path is the reference;
// the parallel path must produce bit-identical results.
#pragma once

#include <cstddef>

namespace hpgrowth {

enum class ExecPolicy { serial, parallel };

/// Calls body(i) for i in [0, n). Each index writes only its own output slot,
/// so the parallel path is race-free and order-independent. body must not
/// throw.
template <class Body>
void for_each_index(std::size_t n, ExecPolicy policy, Body&& body) {
#ifdef HPGROWTH_HAVE_OPENMP
  if (policy == ExecPolicy::parallel) {
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)policy;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

/// Number of threads the parallel policy will use.
int parallel_threads();

}  // namespace hpgrowth
