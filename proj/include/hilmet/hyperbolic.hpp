#pragma once

#include <cmath>

#include "hilmet/geometry.hpp"
#include "hilmet/report.hpp"

namespace hilmet {

namespace detail {

inline void require_in_ball(double n, const char* name) {
    if (n >= 1.0) throw OutOfDomain(std::string(name) + " is outside the open unit ball");
    if (1.0 - n < eps_boundary)
        throw NearBoundary(std::string(name) + " is within " + fmt_g(1.0 - n, 3) +
                           " of the unit sphere");
}

}  // namespace detail

// Hyperbolic distance of the unit ball: sinh(rho/2) = |a-b| / sqrt((1-|a|^2)(1-|b|^2)).
inline double rho_ball(const Vec& a, const Vec& b) {
    detail::require_in_ball(norm(a), "a");
    detail::require_in_ball(norm(b), "b");
    const double s = dist(a, b) / std::sqrt((1.0 - norm2(a)) * (1.0 - norm2(b)));
    return 2.0 * std::asinh(s);
}

inline double rho_ball(cplx a, cplx b) {
    detail::require_in_ball(std::abs(a), "a");
    detail::require_in_ball(std::abs(b), "b");
    const double s = std::abs(a - b) / std::sqrt((1.0 - std::norm(a)) * (1.0 - std::norm(b)));
    return 2.0 * std::asinh(s);
}

// Hyperbolic distance of the upper half plane: cosh(rho) = 1 + |a-b|^2 / (2 Im a Im b).
inline double rho_half_plane(cplx a, cplx b) {
    if (a.imag() <= 0.0 || b.imag() <= 0.0)
        throw OutOfDomain("rho_half_plane: points must have positive imaginary part");
    if (a.imag() < eps_boundary || b.imag() < eps_boundary)
        throw NearBoundary("rho_half_plane: point within margin of the real axis");
    return std::acosh(1.0 + std::norm(a - b) / (2.0 * a.imag() * b.imag()));
}

// Ideal endpoints of the hyperbolic geodesic through a, b in the unit disk.
// a_star is the endpoint nearer a; log cross_ratio(a_star, a, b, b_star) = rho_ball(a, b).
struct GeodesicB2 {
    cplx a_star, b_star;
    bool diameter = false;  // carrier is valid only when false
    Circle2 carrier;        // orthogonal to the unit circle
};

inline GeodesicB2 geodesic_endpoints_ball(cplx a, cplx b) {
    detail::require_in_ball(std::abs(a), "a");
    detail::require_in_ball(std::abs(b), "b");
    if (std::abs(a - b) < eps_degenerate)
        throw DegenerateInput("geodesic_endpoints_ball: a and b coincide");
    const double det = cross(a, b);
    if (std::fabs(det) < eps_degenerate * std::max(1.0, std::abs(a) * std::abs(b))) {
        // Geodesic through the origin: a diameter.
        const cplx e = (b - a) / std::abs(b - a);
        return {-e, e, true, {}};
    }
    // Orthogonal-circle center o solves 2 Re(z ō) = 1 + |z|^2 for z = a and z = b,
    // which makes |o|^2 - r^2 = 1 exact by construction.
    const double ra = 0.5 * (1.0 + std::norm(a));
    const double rb = 0.5 * (1.0 + std::norm(b));
    const cplx o{(ra * b.imag() - rb * a.imag()) / det, (rb * a.real() - ra * b.real()) / det};
    const double q = sqrt_clamped(std::norm(o) - 1.0);
    const cplx w1 = o * (1.0 + cplx{0.0, q}) / std::norm(o);
    const cplx w2 = o * (1.0 - cplx{0.0, q}) / std::norm(o);
    GeodesicB2 g;
    g.carrier = {o, q};
    if (std::abs(a - w1) <= std::abs(b - w1)) {
        g.a_star = w1;
        g.b_star = w2;
    } else {
        g.a_star = w2;
        g.b_star = w1;
    }
    return g;
}

// Euclidean center and radius of the hyperbolic disk B_rho(x, M) in the unit disk:
//   t = tanh(M/2), y = x (1-t^2)/(1-|x|^2 t^2), r = (1-|x|^2) t/(1-|x|^2 t^2).
struct EuclideanDisk {
    cplx center;
    double radius = 0.0;
    double t = 0.0;
};

inline EuclideanDisk hyp_disk_to_euclidean(cplx x, double M) {
    detail::require_in_ball(std::abs(x), "x");
    if (!(M > 0.0)) throw OutOfDomain("hyp_disk_to_euclidean: radius must be positive");
    const double t = std::tanh(M / 2.0);
    const double den = 1.0 - std::norm(x) * t * t;
    return {x * (1.0 - t * t) / den, (1.0 - std::norm(x)) * t / den, t};
}

// A[a,b] = sqrt(|a-b|^2 + (1-|a|^2)(1-|b|^2)); equals |1 - āb| in the plane.
inline double a_bracket(const Vec& a, const Vec& b) {
    return sqrt_clamped(norm2(sub(a, b)) + (1.0 - norm2(a)) * (1.0 - norm2(b)));
}

inline double a_bracket(cplx a, cplx b) {
    return sqrt_clamped(std::norm(a - b) + (1.0 - std::norm(a)) * (1.0 - std::norm(b)));
}

// Residual of the identity
//   |a(1-|b|^2) + b(1-|a|^2)|^2 = (1-|a|^2|b|^2)^2 - (1-|a|^2)(1-|b|^2) A[a,b]^2.
inline double siden_residual(const Vec& a, const Vec& b) {
    const double na = norm2(a), nb = norm2(b);
    const Vec lhs_v = add(mul(a, 1.0 - nb), mul(b, 1.0 - na));
    const double lhs = norm2(lhs_v);
    const double rhs = sq(1.0 - na * nb) - (1.0 - na) * (1.0 - nb) * sq(a_bracket(a, b));
    return std::fabs(lhs - rhs);
}

inline double siden_residual(cplx a, cplx b) {
    return siden_residual(to_vec(a), to_vec(b));
}

// Hyperbolic midpoint of [a, b] in the unit disk:
//   (a(1-|b|^2) + b(1-|a|^2)) / (1 - |a|^2|b|^2 + sqrt((1-|a|^2)(1-|b|^2)) A[a,b]).
inline cplx hyp_midpoint(cplx a, cplx b) {
    detail::require_in_ball(std::abs(a), "a");
    detail::require_in_ball(std::abs(b), "b");
    const double na = std::norm(a), nb = std::norm(b);
    const cplx num = a * (1.0 - nb) + b * (1.0 - na);
    const double den = 1.0 - na * nb + std::sqrt((1.0 - na) * (1.0 - nb)) * a_bracket(a, b);
    return num / den;
}

// Meeting point of the tangent lines at a and b to the circle through a and b
// that is orthogonal support of the construction: (a(1-|b|^2)+b(1-|a|^2)) / (2 - ab̄ - āb).
// Equidistant from a and b.
inline cplx tangent_meet(cplx a, cplx b) {
    detail::require_in_ball(std::abs(a), "a");
    detail::require_in_ball(std::abs(b), "b");
    const double den = 2.0 - 2.0 * (a * std::conj(b)).real();
    if (std::fabs(den) < eps_degenerate)
        throw DegenerateInput("tangent_meet: denominator vanished");
    return (a * (1.0 - std::norm(b)) + b * (1.0 - std::norm(a))) / den;
}

// Foot on the chord [a, b]: (a(1-|b|^2)+b(1-|a|^2)) / (2 - |a|^2 - |b|^2).
inline cplx chord_foot(cplx a, cplx b) {
    detail::require_in_ball(std::abs(a), "a");
    detail::require_in_ball(std::abs(b), "b");
    return (a * (1.0 - std::norm(b)) + b * (1.0 - std::norm(a))) / (2.0 - std::norm(a) - std::norm(b));
}

// Coherence of the three aligned centers built from a chord of the disk:
// cen = tangent_meet, m = hyp_midpoint, p = chord_foot satisfy
// rho(cen, m) = rho(m, p), and the Euclidean circle about cen through a
// coincides with the hyperbolic disk about m of radius rho(a,b)/2.
inline MetricReport midpoint_alignment_report(cplx a, cplx b, double tol = 1e-9) {
    const cplx cen = tangent_meet(a, b);
    const cplx m = hyp_midpoint(a, b);
    const cplx p = chord_foot(a, b);
    const double r1 = rho_ball(cen, m);
    const double r2 = rho_ball(m, p);
    MetricReport rep;
    rep.title = "midpoint alignment";
    rep.note("a", fmt_point(a));
    rep.note("b", fmt_point(b));
    rep.put("rho_cen_mid", r1);
    rep.put("rho_mid_foot", r2);
    rep.check("rho_gap", r1 - r2, tol);
    const double rad = rho_ball(a, b);
    if (rad > 0.0) {
        const EuclideanDisk dsk = hyp_disk_to_euclidean(m, rad / 2.0);
        const double center_gap = std::abs(cen - dsk.center);
        const double radius_gap = std::fabs(std::abs(cen - a) - dsk.radius);
        rep.check("disk_gap", center_gap + radius_gap, tol);
    } else {
        rep.put("disk_gap", 0.0);
    }
    return rep;
}

}  // namespace hilmet
