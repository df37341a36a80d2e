#pragma once

#include <string>
#include <utility>
#include <variant>

#include "hilmet/polygon.hpp"

namespace hilmet {

// Open unit ball in the given dimension.
struct BallDomain {
    int dim = 2;
};

// The convex domains metrics are evaluated on. Polygons are planar;
// ball domains carry their own dimension.
using ConvexDomain = std::variant<BallDomain, ConvexPolygon>;

inline int domain_dim(const ConvexDomain& d) {
    if (const auto* b = std::get_if<BallDomain>(&d)) return b->dim;
    return 2;
}

inline bool is_ball(const ConvexDomain& d) { return std::holds_alternative<BallDomain>(d); }

// Interior margin: positive inside, negative outside.
inline double domain_margin(const ConvexDomain& d, const Vec& x) {
    if (const auto* b = std::get_if<BallDomain>(&d)) {
        if (static_cast<int>(x.size()) != b->dim)
            throw DegenerateInput("point dimension " + std::to_string(x.size()) +
                                  " does not match ball dimension " + std::to_string(b->dim));
        return 1.0 - norm(x);
    }
    return std::get<ConvexPolygon>(d).signed_margin(to_cplx(x));
}

inline void require_interior(const ConvexDomain& d, const Vec& x, const std::string& name) {
    const double m = domain_margin(d, x);
    if (m <= 0.0)
        throw OutsideDomain("point " + name + " = " + fmt_point(x) + " is outside the domain");
    if (m < eps_boundary)
        throw NearBoundary("point " + name + " = " + fmt_point(x) + " is within " +
                           fmt_g(m, 3) + " of the domain boundary");
}

namespace detail {

// Boundary hits of the line through interior points a, b of the unit ball,
// ordered u,a,b,v. Works in any dimension.
inline std::pair<Vec, Vec> ball_chord(const Vec& a, const Vec& b) {
    const Vec d = sub(b, a);
    const double dd = norm2(d);
    const double ad = dot(a, d);
    const double disc = ad * ad - dd * (norm2(a) - 1.0);
    const double root = sqrt_clamped(disc);
    const double t_neg = (-ad - root) / dd;
    const double t_pos = (-ad + root) / dd;
    return {add(a, mul(d, t_neg)), add(a, mul(d, t_pos))};
}

}  // namespace detail

// Chord endpoints of the line through a and b, ordered u,a,b,v.
inline std::pair<Vec, Vec> domain_chord(const ConvexDomain& d, const Vec& a, const Vec& b) {
    require_interior(d, a, "a");
    require_interior(d, b, "b");
    if (dist(a, b) < eps_degenerate)
        throw DegenerateInput("domain chord: a and b coincide");
    if (is_ball(d)) return detail::ball_chord(a, b);
    const auto [u, v] = std::get<ConvexPolygon>(d).chord(to_cplx(a), to_cplx(b));
    return {to_vec(u), to_vec(v)};
}

// Exit parameter: largest s with z + s*dir still in the domain (dir need not be unit).
inline double domain_ray_exit(const ConvexDomain& d, cplx z, cplx dir) {
    if (const auto* b = std::get_if<BallDomain>(&d)) {
        if (b->dim != 2) throw DegenerateInput("ray exit is planar; ball dimension must be 2");
        const double dd = std::norm(dir);
        const double ad = z.real() * dir.real() + z.imag() * dir.imag();
        const double disc = ad * ad - dd * (std::norm(z) - 1.0);
        return (-ad + sqrt_clamped(disc)) / dd;
    }
    const auto& poly = std::get<ConvexPolygon>(d);
    poly.require_interior(z, "center");
    double s_pos = 1e300;
    const auto& vs = poly.vertices();
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const cplx p = vs[i], e = vs[(i + 1) % n] - vs[i];
        const double det = cross(dir, e);
        if (std::fabs(det) < eps_degenerate) continue;
        const cplx r = p - z;
        const double s = cross(r, e) / det;
        const double t = cross(r, dir) / det;
        if (t < -1e-9 || t > 1.0 + 1e-9) continue;
        if (s > 0.0) s_pos = std::min(s_pos, s);
    }
    if (s_pos == 1e300) throw DegenerateInput("ray exit: ray never leaves the polygon");
    return s_pos;
}

}  // namespace hilmet
