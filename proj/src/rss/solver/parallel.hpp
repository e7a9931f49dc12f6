#pragma once

#include <cstddef>

namespace rss {

/// Thread-count hint for assembly and field evaluation. 0 means the runtime default.
void set_num_threads(int n);
int num_threads();

/// Runs body(i) for i in [0, n). Iterations must write disjoint outputs.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(num_threads())
  for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

}  // namespace rss
