#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "hilmet/errors.hpp"

namespace hilmet {

// Degeneracy tolerance for geometric constructions on O(1) data.
inline constexpr double eps_degenerate = 1e-12;

// Minimum interior margin for metric evaluation; distances blow up at the boundary,
// so points closer than this are rejected instead of returning huge floats.
inline constexpr double eps_boundary = 1e-9;

// Width of the rounding band clamped at the edge of inverse hyperbolic domains.
inline constexpr double eps_clamp = 1e-15;

inline double sq(double x) { return x * x; }

// acosh with arguments allowed to round just below 1.
inline double acosh_clamped(double x) {
    if (x >= 1.0) return std::acosh(x);
    if (1.0 - x <= eps_clamp * std::max(1.0, std::fabs(x))) return 0.0;
    throw NearBoundary("acosh argument " + std::to_string(x) + " below 1 beyond clamp width");
}

// atanh on (-1, 1); arguments that rounded onto or past the edge are rejected,
// a clamped value would misreport an infinite distance as finite.
inline double atanh_checked(double x) {
    const double ax = std::fabs(x);
    if (ax < 1.0) return std::atanh(x);
    if (ax - 1.0 <= eps_clamp)
        throw NearBoundary("atanh argument " + std::to_string(x) + " at domain edge");
    throw OutOfDomain("atanh argument " + std::to_string(x) + " outside (-1, 1)");
}

// sqrt for quantities that are nonnegative up to rounding.
inline double sqrt_clamped(double x) {
    return std::sqrt(std::max(0.0, x));
}

// Shortest-form decimal with the given significant digits ("%.*g").
inline std::string fmt_g(double x, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

}  // namespace hilmet
