#pragma once

#include <cstdint>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace aptorus {

/// Execution lane for the audit sweeps. Serial is the reference
/// implementation kept for testing; Parallel is the OpenMP lane. Both must
/// produce identical results (max/min reductions are order-independent).
enum class Exec { Serial, Parallel };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <class F>
double max_over_range(std::int64_t n, Exec ex, F&& f) {
    double best = 0.0;
    if (ex == Exec::Serial) {
        for (std::int64_t i = 0; i < n; ++i) {
            double v = f(i);
            if (v > best) best = v;
        }
        return best;
    }
#pragma omp parallel for reduction(max : best) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        double v = f(i);
        if (v > best) best = v;
    }
    return best;
}

/// Minimum of f(i) with the smallest attaining index (deterministic in both
/// lanes; ties resolved toward the lower index).
template <class F>
std::pair<double, std::int64_t> min_argmin(std::int64_t n, Exec ex, F&& f) {
    double best = 0.0;
    std::int64_t arg = -1;
    if (ex == Exec::Serial) {
        for (std::int64_t i = 0; i < n; ++i) {
            double v = f(i);
            if (arg < 0 || v < best || (v == best && i < arg)) {
                best = v;
                arg = i;
            }
        }
        return {best, arg};
    }
#pragma omp parallel
    {
        double lbest = 0.0;
        std::int64_t larg = -1;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            double v = f(i);
            if (larg < 0 || v < lbest || (v == lbest && i < larg)) {
                lbest = v;
                larg = i;
            }
        }
#pragma omp critical
        {
            if (larg >= 0 &&
                (arg < 0 || lbest < best || (lbest == best && larg < arg))) {
                best = lbest;
                arg = larg;
            }
        }
    }
    return {best, arg};
}

template <class F>
void for_range(std::int64_t n, Exec ex, F&& f) {
    if (ex == Exec::Serial) {
        for (std::int64_t i = 0; i < n; ++i) f(i);
        return;
    }
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) f(i);
}

/// Integer count reduction (exact in any order).
template <class F>
std::int64_t count_over_range(std::int64_t n, Exec ex, F&& f) {
    std::int64_t c = 0;
    if (ex == Exec::Serial) {
        for (std::int64_t i = 0; i < n; ++i) c += f(i) ? 1 : 0;
        return c;
    }
#pragma omp parallel for reduction(+ : c) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) c += f(i) ? 1 : 0;
    return c;
}

}  // namespace aptorus
