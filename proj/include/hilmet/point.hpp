#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "hilmet/errors.hpp"
#include "hilmet/numeric.hpp"

namespace hilmet {

// Planar work runs on complex numbers, n-dimensional work on coordinate vectors.
using cplx = std::complex<double>;
using Vec = std::vector<double>;

inline void require_same_dim(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DegenerateInput("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()));
}

inline double dot(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }

inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline Vec sub(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec add(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec mul(const Vec& a, double s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

inline double dist(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

inline cplx to_cplx(const Vec& v) {
    if (v.size() != 2) throw DegenerateInput("expected a 2d point, got dimension " + std::to_string(v.size()));
    return {v[0], v[1]};
}

inline Vec to_vec(cplx z) { return {z.real(), z.imag()}; }

// z-component of the cross product of 2d vectors.
inline double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

inline std::string fmt_point(cplx z, int digits = 12) {
    return "(" + fmt_g(z.real(), digits) + ", " + fmt_g(z.imag(), digits) + ")";
}

inline std::string fmt_point(const Vec& v, int digits = 12) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += fmt_g(v[i], digits);
    }
    return s + ")";
}

}  // namespace hilmet
