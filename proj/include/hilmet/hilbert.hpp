#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "hilmet/domain.hpp"
#include "hilmet/geometry.hpp"
#include "hilmet/hyperbolic.hpp"

namespace hilmet {

// ===== Hilbert metric =====

// Closed form on the unit ball: cosh(h/2) = (1 - a.b) / sqrt((1-|a|^2)(1-|b|^2)).
inline double h_ball(const Vec& a, const Vec& b) {
    detail::require_in_ball(norm(a), "a");
    detail::require_in_ball(norm(b), "b");
    const double arg = (1.0 - dot(a, b)) / std::sqrt((1.0 - norm2(a)) * (1.0 - norm2(b)));
    return 2.0 * acosh_clamped(arg);
}

inline double h_ball(cplx a, cplx b) { return h_ball(to_vec(a), to_vec(b)); }

// Chord definition on any convex domain: log cross_ratio(u, a, b, v) with
// u, v the boundary points of the line through a and b, u on the far side of a.
inline double h_chord(const ConvexDomain& d, const Vec& a, const Vec& b) {
    require_interior(d, a, "a");
    require_interior(d, b, "b");
    if (dist(a, b) < eps_degenerate) return 0.0;
    const auto [u, v] = domain_chord(d, a, b);
    return std::log(cross_ratio(u, a, b, v));
}

inline double h_chord(const ConvexDomain& d, cplx a, cplx b) {
    return h_chord(d, to_vec(a), to_vec(b));
}

// Preferred evaluation: closed form on balls, chords elsewhere.
inline double hilbert_distance(const ConvexDomain& d, const Vec& a, const Vec& b) {
    if (is_ball(d)) {
        require_interior(d, a, "a");
        require_interior(d, b, "b");
        return h_ball(a, b);
    }
    return h_chord(d, a, b);
}

inline double hilbert_distance(const ConvexDomain& d, cplx a, cplx b) {
    return hilbert_distance(d, to_vec(a), to_vec(b));
}

// ===== Chord construction in the unit disk =====

// Chord data of the unit disk through a and b: c is the point of the chord
// closest to the origin (|c| = dist_origin_line), u and v the circle points with
//   u = c + (a-b)/|a-b| sqrt(1-|c|^2),  v = c + (b-a)/|a-b| sqrt(1-|c|^2),
// so u, a, b, v lie on the chord in this order.
struct ChordB2 {
    cplx u, v, c;
};

inline ChordB2 h_geodesic_chord(cplx a, cplx b) {
    detail::require_in_ball(std::abs(a), "a");
    detail::require_in_ball(std::abs(b), "b");
    if (std::abs(a - b) < eps_degenerate)
        throw DegenerateInput("h_geodesic_chord: a and b coincide");
    const cplx perp = cplx{0.0, 1.0} * (b - a);
    const cplx c = line_intersection(a, b, cplx{0.0, 0.0}, perp);
    const double half = sqrt_clamped(1.0 - std::norm(c));
    const cplx e = (a - b) / std::abs(a - b);
    return {c + e * half, c - e * half, c};
}

// ===== Hilbert midpoint =====

// The point p of the chord with h(a,p) = h(p,b). In the chord coordinate the
// equal-cross-ratio condition reduces to sigma/(L-sigma) = sqrt(alpha beta / ((L-alpha)(L-beta))).
inline Vec hilbert_midpoint(const ConvexDomain& d, const Vec& a, const Vec& b) {
    require_interior(d, a, "a");
    require_interior(d, b, "b");
    if (dist(a, b) < eps_degenerate) return a;
    const auto [u, v] = domain_chord(d, a, b);
    const double L = dist(u, v);
    const double alpha = dist(u, a);
    const double beta = dist(u, b);
    const double q = std::sqrt(alpha * beta / ((L - alpha) * (L - beta)));
    const double sigma = q * L / (1.0 + q);
    return add(u, mul(sub(v, u), sigma / L));
}

inline cplx hilbert_midpoint(const ConvexDomain& d, cplx a, cplx b) {
    return to_cplx(hilbert_midpoint(d, to_vec(a), to_vec(b)));
}

// ===== Tangency points =====

// The two unit-circle points w where the circle through a, b touching the unit
// circle internally at w exists:
//   w = (|a|^2 - |b|^2 +- i |a-b| sqrt((1-|a|^2)(1-|b|^2))) / ((a-b) ā b̄ + ā - b̄).
// The pair lies on opposite sides of the line through a and b.
inline std::pair<cplx, cplx> tangency_points(cplx a, cplx b) {
    detail::require_in_ball(std::abs(a), "a");
    detail::require_in_ball(std::abs(b), "b");
    if (std::abs(a - b) < eps_degenerate)
        throw DegenerateInput("tangency_points: a and b coincide");
    const cplx k = (a - b) * std::conj(a) * std::conj(b) + std::conj(a) - std::conj(b);
    if (std::abs(k) < eps_degenerate)
        throw DegenerateInput("tangency_points: degenerate denominator");
    const double re = std::norm(a) - std::norm(b);
    const double im = std::abs(a - b) * std::sqrt((1.0 - std::norm(a)) * (1.0 - std::norm(b)));
    return {(cplx{re, im}) / k, (cplx{re, -im}) / k};
}

// ===== Projections between circle chords =====

// Projection from w of the chord [u,v] onto the unit circle, in closed form:
//   F(z) = ((uv - uw - vw) z + uvw) / (-wz + uv).
// Fixes u and v; for z on the circle F(z) is the second line intersection of L[z,w]
// with L[u,v] when the lines meet.
inline cplx chordal_projection(cplx u, cplx v, cplx w, cplx z) {
    for (cplx p : {u, v, w, z})
        if (std::fabs(std::abs(p) - 1.0) > 1e-10)
            throw NotOnCircle("chordal_projection: point " + fmt_point(p) +
                              " is not on the unit circle");
    if (std::abs(w - u) < eps_degenerate || std::abs(w - v) < eps_degenerate)
        throw DegenerateInput("chordal_projection: w coincides with a chord endpoint");
    const cplx den = -w * z + u * v;
    if (std::abs(den) < eps_degenerate)
        throw ParallelLines("chordal_projection: chord [z,w] is parallel to [u,v]");
    return ((u * v - u * w - v * w) * z + u * v * w) / den;
}

// Second intersection of the line through interior p and circle point z with the
// unit circle: f_p(z) = -(z - p) / (1 - p̄ z). Collinear with p and z by construction.
inline cplx second_intersection(cplx p, cplx z) {
    detail::require_in_ball(std::abs(p), "p");
    if (std::fabs(std::abs(z) - 1.0) > 1e-10)
        throw NotOnCircle("second_intersection: z is not on the unit circle");
    return -(z - p) / (1.0 - std::conj(p) * z);
}

// ===== Hilbert spheres of the ball are ellipsoids =====

// S_h(c, R) in the unit ball is the Euclidean ellipsoid of revolution with
//   s = |c|, k = tanh(R/2),
//   center  c' = (1-k^2) c / (1-s^2 k^2),
//   polar semiaxis   a_min = k (1-s^2)   / (1-s^2 k^2)   (along c),
//   equator semiaxis a_max = k sqrt(1-s^2) / sqrt(1-s^2 k^2).
struct EllipsoidSpec {
    Vec center;
    Vec axis;  // unit vector along the revolution axis
    double a_min = 0.0;
    double a_max = 0.0;
    int dim = 0;
};

inline EllipsoidSpec hilbert_sphere_ellipsoid(const Vec& c, double R) {
    detail::require_in_ball(norm(c), "c");
    if (!(R > 0.0)) throw OutOfDomain("hilbert_sphere_ellipsoid: radius must be positive");
    const double s = norm(c);
    const double k = std::tanh(R / 2.0);
    EllipsoidSpec e;
    e.dim = static_cast<int>(c.size());
    if (s < eps_degenerate) {
        // Centered sphere of Euclidean radius tanh(R/2).
        e.center = Vec(c.size(), 0.0);
        e.axis = Vec(c.size(), 0.0);
        e.axis[0] = 1.0;
        e.a_min = e.a_max = k;
        return e;
    }
    const double den = 1.0 - s * s * k * k;
    e.center = mul(c, (1.0 - k * k) / den);
    e.axis = mul(c, 1.0 / s);
    e.a_min = k * (1.0 - s * s) / den;
    e.a_max = k * std::sqrt(1.0 - s * s) / std::sqrt(den);
    return e;
}

// Surface point at meridian angle phi in the plane spanned by the axis and a
// unit direction w orthogonal to it.
inline Vec ellipsoid_point(const EllipsoidSpec& e, double phi, const Vec& w) {
    Vec x = e.center;
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] += e.a_min * std::cos(phi) * e.axis[i] + e.a_max * std::sin(phi) * w[i];
    return x;
}

// Sphere identity residual: (1 - c.x)^2 - cosh^2(R/2)(1-|c|^2)(1-|x|^2), zero
// exactly when x is on the Hilbert sphere S_h(c, R).
inline double sphere_identity_residual(const Vec& c, double R, const Vec& x) {
    return sq(1.0 - dot(c, x)) - sq(std::cosh(R / 2.0)) * (1.0 - norm2(c)) * (1.0 - norm2(x));
}

// ===== Metric balls as polylines =====

struct Polyline {
    std::vector<cplx> points;
    bool closed = false;
};

// Boundary of the Hilbert ball B_h(z, t) in a planar domain, sampled along
// ndirs rays by monotone bisection on the ray parameter (200-iteration cap).
inline Polyline hilbert_ball_boundary(const ConvexDomain& d, cplx z, double t, int ndirs) {
    if (ndirs < 3) throw DegenerateInput("hilbert_ball_boundary: need at least 3 directions");
    if (!(t > 0.0)) throw OutOfDomain("hilbert_ball_boundary: radius must be positive");
    require_interior(d, to_vec(z), "center");
    Polyline out;
    out.closed = true;
    out.points.reserve(static_cast<std::size_t>(ndirs));
    for (int j = 0; j < ndirs; ++j) {
        const double th = 2.0 * M_PI * j / ndirs;
        const cplx dir{std::cos(th), std::sin(th)};
        const double s_max = domain_ray_exit(d, z, dir);
        // Largest s whose boundary margin stays >= 2 eps_boundary; the margin
        // is concave along the ray, so bisection brackets it and every point
        // of [0, hi] clears the interior guard.
        double mlo = 0.0, mhi = s_max;
        for (int k = 0; k < 80; ++k) {
            const double mid = 0.5 * (mlo + mhi);
            (domain_margin(d, to_vec(z + mid * dir)) >= 2.0 * eps_boundary ? mlo : mhi) = mid;
        }
        double lo = 0.0, hi = mlo;
        const auto value = [&](double s) { return hilbert_distance(d, z, z + s * dir); };
        if (value(hi) < t)
            throw ConvergenceFailure("hilbert_ball_boundary: radius " + fmt_g(t, 6) +
                                     " exceeds the evaluable margin along direction " +
                                     fmt_g(th, 6));
        int iter = 0;
        while (hi - lo > 1e-16 * s_max && iter < 200) {
            const double mid = 0.5 * (lo + hi);
            (value(mid) < t ? lo : hi) = mid;
            ++iter;
        }
        const double s = 0.5 * (lo + hi);
        if (std::fabs(value(s) - t) > 1e-10)
            throw ConvergenceFailure("hilbert_ball_boundary: bisection residual above 1e-10");
        out.points.push_back(z + s * dir);
    }
    return out;
}

// ===== Euclidean chord-length bound =====

// For domains inside the closed unit disk, 2 tanh(h_D(a,b)/4) >= |a-b|.
// Returns the margin 2 tanh(h/4) - |a-b| (nonnegative when the bound holds).
inline double chord_length_margin(const ConvexDomain& d, const Vec& a, const Vec& b) {
    if (const auto* poly = std::get_if<ConvexPolygon>(&d)) {
        for (cplx p : poly->vertices())
            if (std::abs(p) > 1.0 + eps_degenerate)
                throw DomainNotNormalized("chord_length_margin: polygon vertex " + fmt_point(p) +
                                          " lies outside the closed unit disk");
    }
    const double h = hilbert_distance(d, a, b);
    return 2.0 * std::tanh(h / 4.0) - dist(a, b);
}

inline double chord_length_margin(const ConvexDomain& d, cplx a, cplx b) {
    return chord_length_margin(d, to_vec(a), to_vec(b));
}

}  // namespace hilmet
