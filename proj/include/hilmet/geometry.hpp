#pragma once

#include <cmath>
#include <utility>

#include "hilmet/errors.hpp"
#include "hilmet/numeric.hpp"
#include "hilmet/point.hpp"

namespace hilmet {

struct Line2 {
    cplx p, q;  // two distinct points on the line
};

struct Circle2 {
    cplx center;
    double radius = 0.0;
};

// |u,a,b,v| = |u-b||a-v| / (|u-a||b-v|).
// For collinear points in the order u,a,b,v this is the projective cross ratio,
// but the quotient itself is defined for any placement.
inline double cross_ratio(cplx u, cplx a, cplx b, cplx v) {
    const double den1 = std::abs(u - a);
    const double den2 = std::abs(b - v);
    if (den1 < eps_degenerate) throw DegenerateInput("cross_ratio: |u-a| below tolerance");
    if (den2 < eps_degenerate) throw DegenerateInput("cross_ratio: |b-v| below tolerance");
    return std::abs(u - b) * std::abs(a - v) / (den1 * den2);
}

inline double cross_ratio(const Vec& u, const Vec& a, const Vec& b, const Vec& v) {
    const double den1 = dist(u, a);
    const double den2 = dist(b, v);
    if (den1 < eps_degenerate) throw DegenerateInput("cross_ratio: |u-a| below tolerance");
    if (den2 < eps_degenerate) throw DegenerateInput("cross_ratio: |b-v| below tolerance");
    return dist(u, b) * dist(a, v) / (den1 * den2);
}

// Intersection of the lines through a,b and through c,d, in complex form:
//   ((āb - ab̄)(c-d) - (a-b)(c̄d - cd̄)) / ((ā-b̄)(c-d) - (a-b)(c̄-d̄)).
inline cplx line_intersection(cplx a, cplx b, cplx c, cplx d) {
    const double lab = std::abs(a - b);
    const double lcd = std::abs(c - d);
    if (lab < eps_degenerate) throw DegenerateInput("line_intersection: a and b coincide");
    if (lcd < eps_degenerate) throw DegenerateInput("line_intersection: c and d coincide");
    const cplx num = (std::conj(a) * b - a * std::conj(b)) * (c - d) -
                     (a - b) * (std::conj(c) * d - c * std::conj(d));
    const cplx den = (std::conj(a) - std::conj(b)) * (c - d) -
                     (a - b) * (std::conj(c) - std::conj(d));
    // |den| = 2 |a-b||c-d| sin(angle); threshold relative to the chord lengths.
    if (std::abs(den) < eps_degenerate * std::max(1.0, 2.0 * lab * lcd))
        throw ParallelLines("line_intersection: carrier lines are parallel");
    return num / den;
}

// Chord-intersection form for four points on the unit circle:
//   (ab(c+d) - cd(a+b)) / (ab - cd).
// Chords [a,b] and [c,d] of the circle are parallel exactly when ab = cd.
inline cplx line_intersection_on_circle(cplx a, cplx b, cplx c, cplx d) {
    for (cplx z : {a, b, c, d})
        if (std::fabs(std::abs(z) - 1.0) > 1e-10)
            throw NotOnCircle("line_intersection_on_circle: point " + fmt_point(z) +
                              " is not on the unit circle");
    const cplx den = a * b - c * d;
    if (std::abs(den) < eps_degenerate)
        throw ParallelLines("line_intersection_on_circle: chords are parallel");
    return (a * b * (c + d) - c * d * (a + b)) / den;
}

// Circumscribed circle of a nondegenerate triangle.
inline Circle2 circle_through(cplx a, cplx b, cplx c) {
    const double scale = std::max(1.0, std::abs(b - a) * std::abs(c - a));
    const double twice_area = cross(b - a, c - a);
    if (std::fabs(twice_area) < eps_degenerate * scale)
        throw CollinearPoints("circle_through: points are collinear");
    const double ax = a.real(), ay = a.imag();
    const double bx = b.real(), by = b.imag();
    const double cx = c.real(), cy = c.imag();
    const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    const double na = ax * ax + ay * ay, nb = bx * bx + by * by, nc = cx * cx + cy * cy;
    const cplx o{(na * (by - cy) + nb * (cy - ay) + nc * (ay - by)) / d,
                 (na * (cx - bx) + nb * (ax - cx) + nc * (bx - ax)) / d};
    return {o, std::abs(o - a)};
}

// Disk automorphism z -> (z - a)/(1 - āz) sending a to the origin.
inline cplx mobius_to_origin(cplx a, cplx z) {
    const double na = std::abs(a);
    if (na >= 1.0) throw OutOfDomain("mobius_to_origin: |a| must be < 1");
    if (na < eps_degenerate) throw OutOfDomain("mobius_to_origin: a must be nonzero");
    if (std::abs(z) > 1.0 + eps_degenerate)
        throw OutOfDomain("mobius_to_origin: z outside the closed unit disk");
    return (z - a) / (1.0 - std::conj(a) * z);
}

// Distance from the origin to the full line through a and b.
inline double dist_origin_line(cplx a, cplx b) {
    const double lab = std::abs(a - b);
    if (lab < eps_degenerate) throw DegenerateInput("dist_origin_line: a and b coincide");
    return std::fabs((std::conj(a) * b).imag()) / lab;
}

inline double dist_origin_line(const Vec& a, const Vec& b) {
    const double lab = dist(a, b);
    if (lab < eps_degenerate) throw DegenerateInput("dist_origin_line: a and b coincide");
    // Gram form of |(b-a) ^ a| / |b-a|.
    const Vec d = sub(b, a);
    const double g = norm2(d) * norm2(a) - sq(dot(d, a));
    return sqrt_clamped(g) / lab;
}

}  // namespace hilmet
