#pragma once

// Thin OpenMP wrapper. Every caller writes into a slot indexed by the loop
// variable, so results do not depend on the thread count.

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nak {

inline void set_threads(int k)
{
#ifdef _OPENMP
    if (k > 0) omp_set_num_threads(k);
#else
    (void)k;
#endif
}

inline int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Exceptions thrown by the body are collected and the one from the lowest
// index is rethrown after the loop.
template <class F>
void parallel_for(std::size_t n, F&& body)
{
    const long long count = static_cast<long long>(n);
    std::exception_ptr first;
    long long first_at = count;
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(nak_parallel_for)
            if (i < first_at) {
                first_at = i;
                first = std::current_exception();
            }
        }
    }
    if (first) std::rethrow_exception(first);
}

}  // namespace nak
