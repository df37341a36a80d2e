#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "hilmet/domain.hpp"

namespace hilmet {

// Regular n-gon with vertices on the unit circle, first vertex at angle phase.
inline ConvexPolygon inscribed_polygon(int n, double phase = 0.0) {
    if (n < 3) throw DomainNotNormalized("inscribed_polygon: need at least 3 vertices");
    std::vector<cplx> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double t = phase + 2.0 * M_PI * k / n;
        v.emplace_back(std::cos(t), std::sin(t));
    }
    return ConvexPolygon(std::move(v));
}

// Equilateral triangle inscribed in the unit circle, apex at (0, 1).
inline ConvexPolygon inscribed_triangle() { return inscribed_polygon(3, M_PI / 2.0); }

// Square inscribed in the unit circle, vertices on the diagonals.
inline ConvexPolygon inscribed_square() { return inscribed_polygon(4, M_PI / 4.0); }

// The axis-aligned square [-1, 1]^2 (the `square` preset).
inline ConvexPolygon axis_square() {
    return ConvexPolygon({{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}});
}

// Quarter-disk sector truncated near the apex by the chord at radius 0.2,
// with the arc approximated by 16 segments (the `sector` preset).
inline ConvexPolygon sector_polygon() {
    const double theta = M_PI / 2.0;
    const int arc_segments = 16;
    std::vector<cplx> v;
    v.emplace_back(0.2, 0.0);
    for (int k = 0; k <= arc_segments; ++k) {
        const double t = theta * k / arc_segments;
        v.emplace_back(std::cos(t), std::sin(t));
    }
    v.emplace_back(0.2 * std::cos(theta), 0.2 * std::sin(theta));
    return ConvexPolygon(std::move(v));
}

// Scales every vertex about the origin; keeps orientation and convexity.
inline ConvexPolygon scaled_polygon(const ConvexPolygon& p, double factor) {
    if (!(factor > 0.0)) throw DomainNotNormalized("scaled_polygon: factor must be positive");
    std::vector<cplx> v;
    v.reserve(p.size());
    for (const cplx& z : p.vertices()) v.push_back(factor * z);
    return ConvexPolygon(std::move(v));
}

inline ConvexDomain preset_domain(const std::string& name) {
    if (name == "square") return axis_square();
    if (name == "triangle") return inscribed_triangle();
    if (name == "sector") return sector_polygon();
    throw DomainNotNormalized("unknown preset '" + name + "' (available: square, triangle, sector)");
}

}  // namespace hilmet
