#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace backbone {

/// Maps the user-facing worker count (0 = library default) to a concrete
/// thread count.
inline int resolve_workers(int workers) {
#ifdef _OPENMP
    return workers > 0 ? workers : omp_get_max_threads();
#else
    (void)workers;
    return 1;
#endif
}

}  // namespace backbone
