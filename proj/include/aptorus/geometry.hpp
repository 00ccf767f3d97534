#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <span>

#include "aptorus/multiindex.hpp"

namespace aptorus {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Fixed-capacity point/vector in R^d, d <= kMaxDim. The active dimension is
/// carried by the surrounding object; trailing entries stay zero.
using Vec = std::array<double, kMaxDim>;

inline Vec make_vec(std::span<const double> x) {
    Vec v{};
    for (std::size_t i = 0; i < x.size() && i < static_cast<std::size_t>(kMaxDim); ++i)
        v[i] = x[i];
    return v;
}

inline double norm(std::span<const double> x) {
    double s = 0.0;
    for (double xi : x) s += xi * xi;
    return std::sqrt(s);
}

inline double norm(const Vec& x, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s += x[i] * x[i];
    return std::sqrt(s);
}

inline double sup_norm(const Vec& x, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s = std::max(s, std::abs(x[i]));
    return s;
}

/// Wrap a coordinate into the fundamental domain [-pi, pi).
inline double wrap_coord(double x) {
    double y = std::remainder(x, kTwoPi);  // in [-pi, pi]
    if (y == std::numbers::pi) y = -std::numbers::pi;
    return y;
}

inline Vec wrap_point(const Vec& x, int dim) {
    Vec y{};
    for (int i = 0; i < dim; ++i) y[i] = wrap_coord(x[i]);
    return y;
}

/// Geodesic distance on the flat torus T^m. Wrapping each coordinate
/// difference into [-pi, pi) selects the nearest of the 3^m periodic images.
inline double torus_distance(const Vec& a, const Vec& b, int m) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
        double d = wrap_coord(a[i] - b[i]);
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace aptorus
