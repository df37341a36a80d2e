#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hilmet/geometry.hpp"

namespace hilmet {

namespace detail {

inline double point_segment_dist(cplx x, cplx p, cplx q) {
    const cplx d = q - p;
    const double l2 = std::norm(d);
    if (l2 < sq(eps_degenerate)) return std::abs(x - p);
    double t = ((x - p).real() * d.real() + (x - p).imag() * d.imag()) / l2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(x - (p + t * d));
}

}  // namespace detail

// Bounded convex polygon, vertices stored counterclockwise.
// Construction validates strict convexity; collinear or repeated vertices are rejected.
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<cplx> verts) : v_(std::move(verts)) {
        validate({}, "polygon");
    }

    // Text format: one "x y" vertex per line, '#' starts a comment, closure implicit.
    static ConvexPolygon parse(std::istream& in, const std::string& origin) {
        std::vector<cplx> verts;
        std::vector<int> lines;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            double x, y;
            if (!(ls >> x)) {
                std::string leftover;
                if (ls.clear(), ls >> leftover)
                    throw DomainNotNormalized(origin + ":" + std::to_string(lineno) +
                                              ": expected 'x y', got '" + line + "'");
                continue;  // blank or comment-only line
            }
            if (!(ls >> y))
                throw DomainNotNormalized(origin + ":" + std::to_string(lineno) +
                                          ": expected 'x y', got '" + line + "'");
            std::string trailing;
            if (ls >> trailing)
                throw DomainNotNormalized(origin + ":" + std::to_string(lineno) +
                                          ": trailing content '" + trailing + "'");
            verts.emplace_back(x, y);
            lines.push_back(lineno);
        }
        ConvexPolygon p;
        p.v_ = std::move(verts);
        p.validate(lines, origin);
        return p;
    }

    static ConvexPolygon from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw DomainNotNormalized(path + ": cannot open polygon file");
        return parse(in, path);
    }

    const std::vector<cplx>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }

    cplx vertex_mean() const {
        cplx s{0.0, 0.0};
        for (cplx p : v_) s += p;
        return s / static_cast<double>(v_.size());
    }

    // Positive inside (Euclidean distance to the boundary), negative outside.
    double signed_margin(cplx x) const {
        const std::size_t n = v_.size();
        double inside_min = 1e300;
        bool inside = true;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx p = v_[i], q = v_[(i + 1) % n];
            const double s = cross(q - p, x - p) / std::abs(q - p);
            if (s < 0.0) inside = false;
            inside_min = std::min(inside_min, s);
        }
        if (inside) return inside_min;
        double d = 1e300;
        for (std::size_t i = 0; i < n; ++i)
            d = std::min(d, detail::point_segment_dist(x, v_[i], v_[(i + 1) % n]));
        return -d;
    }

    bool contains(cplx x, double margin = 0.0) const { return signed_margin(x) > margin; }

    // Boundary points u, v of the full line through a and b, ordered u,a,b,v
    // (u on the far side of a). Both inputs must be strictly interior.
    std::pair<cplx, cplx> chord(cplx a, cplx b) const {
        if (std::abs(a - b) < eps_degenerate)
            throw DegenerateInput("polygon chord: a and b coincide");
        require_interior(a, "a");
        require_interior(b, "b");
        const cplx dir = (b - a) / std::abs(b - a);
        double s_neg = -1e300, s_pos = 1e300;
        const std::size_t n = v_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const cplx p = v_[i], e = v_[(i + 1) % n] - v_[i];
            const double det = cross(dir, e);
            if (std::fabs(det) < eps_degenerate) continue;  // edge parallel to the chord
            const cplx r = p - a;
            const double s = cross(r, e) / det;
            const double t = cross(r, dir) / det;
            if (t < -1e-9 || t > 1.0 + 1e-9) continue;
            if (s < 0.0) s_neg = std::max(s_neg, s);
            else s_pos = std::min(s_pos, s);
        }
        if (s_neg == -1e300 || s_pos == 1e300)
            throw DegenerateInput("polygon chord: line does not cross the boundary twice");
        return {a + s_neg * dir, a + s_pos * dir};
    }

    void require_interior(cplx x, const std::string& name) const {
        const double m = signed_margin(x);
        if (m <= 0.0)
            throw OutsideDomain("point " + name + " = " + fmt_point(x) + " is outside the polygon");
        if (m < eps_boundary)
            throw NearBoundary("point " + name + " = " + fmt_point(x) +
                               " is within " + fmt_g(m, 3) + " of the polygon boundary");
    }

private:
    ConvexPolygon() = default;

    void validate(std::vector<int> lines, const std::string& origin) {
        const std::size_t n = v_.size();
        if (n < 3)
            throw DomainNotNormalized(origin + ": a polygon needs at least 3 vertices, got " +
                                      std::to_string(n));
        double area2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) area2 += cross(v_[i], v_[(i + 1) % n]);
        if (std::fabs(area2) < eps_degenerate)
            throw DomainNotNormalized(origin + ": polygon has zero area");
        if (area2 < 0.0) {  // normalize to counterclockwise
            std::reverse(v_.begin(), v_.end());
            std::reverse(lines.begin(), lines.end());
        }
        for (std::size_t i = 0; i < n; ++i) {
            const cplx e1 = v_[(i + 1) % n] - v_[i];
            const cplx e2 = v_[(i + 2) % n] - v_[(i + 1) % n];
            const auto where = [&](std::size_t k) {
                const std::size_t j = (i + k) % n;
                return lines.empty() ? "vertex " + std::to_string(j)
                                     : "vertex " + std::to_string(j) + " (line " +
                                           std::to_string(lines[j]) + ")";
            };
            if (std::abs(e1) < eps_degenerate)
                throw DomainNotNormalized(origin + ": repeated vertex at " + where(1));
            const double turn = cross(e1, e2);
            if (turn <= eps_degenerate * std::max(1.0, std::abs(e1) * std::abs(e2)))
                throw DomainNotNormalized(origin + ": not strictly convex at " + where(1));
        }
    }

    std::vector<cplx> v_;
};

}  // namespace hilmet
