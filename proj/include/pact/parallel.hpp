#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pact {

// Process switch between the OpenMP kernels and the serial reference path.
// Tests run both and require identical output; the bench tool compares them.
void set_parallel(bool on);
bool parallel_enabled();

// Data-parallel loop over independent items. Bodies must not share mutable
// state; results go into per-index slots.
template <typename F>
void parallel_for(std::size_t count, F&& body) {
#ifdef _OPENMP
    if (parallel_enabled()) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < count; ++i) body(i);
}

} // namespace pact
