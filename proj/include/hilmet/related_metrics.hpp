#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "hilmet/domain.hpp"
#include "hilmet/hyperbolic.hpp"
#include "hilmet/report.hpp"

namespace hilmet {

namespace detail {

// Boundary parameterization used by the sampled searches: arc angle on the
// circle, edge index plus fraction on a polygon. Planar domains only.
inline double boundary_period(const ConvexDomain& D) {
    if (is_ball(D)) {
        if (domain_dim(D) != 2) throw OutOfDomain("boundary sampling requires a planar domain");
        return 2.0 * M_PI;
    }
    return static_cast<double>(std::get<ConvexPolygon>(D).size());
}

inline cplx boundary_at(const ConvexDomain& D, double s) {
    const double P = boundary_period(D);
    s = std::fmod(s, P);
    if (s < 0.0) s += P;
    if (is_ball(D)) return {std::cos(s), std::sin(s)};
    const auto& poly = std::get<ConvexPolygon>(D);
    const int n = static_cast<int>(poly.size());
    int i = static_cast<int>(std::floor(s));
    if (i >= n) i = n - 1;
    const double t = s - i;
    const cplx p = poly.vertices()[static_cast<std::size_t>(i)];
    const cplx q = poly.vertices()[static_cast<std::size_t>((i + 1) % n)];
    return p + t * (q - p);
}

// Golden-section maximization on [lo, hi]; returns {value, argmax}.
template <class F>
inline std::pair<double, double> golden_max(F&& f, double lo, double hi, int iters = 48) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc < fd) {
            lo = c; c = d; fc = fd;
            d = lo + gr * (hi - lo); fd = f(d);
        } else {
            hi = d; d = c; fd = fc;
            c = hi - gr * (hi - lo); fc = f(c);
        }
    }
    return fc > fd ? std::make_pair(fc, c) : std::make_pair(fd, d);
}

// Grid scan plus golden refinement of the winning cell, over one period.
template <class F>
inline std::pair<double, double> boundary_line_max(F&& f, double period, int grid) {
    double best = -1e300, s_best = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double s = period * i / grid;
        const double v = f(s);
        if (v > best) { best = v; s_best = s; }
    }
    const double w = period / grid;
    auto [v, s] = golden_max(f, s_best - w, s_best + w);
    return v >= best ? std::make_pair(v, s) : std::make_pair(best, s_best);
}

// Maximum of |x - num|^2 / |x - den|^2 over the segment p + t (q - p), t in [0, 1].
// The interior critical points solve a quadratic in t.
inline double edge_ratio_max(cplx p, cplx q, cplx num, cplx den) {
    const cplx e = q - p;
    const double A = std::norm(e);
    const double Bn = 2.0 * ((p - num).real() * e.real() + (p - num).imag() * e.imag());
    const double Cn = std::norm(p - num);
    const double Bd = 2.0 * ((p - den).real() * e.real() + (p - den).imag() * e.imag());
    const double Cd = std::norm(p - den);
    auto val = [&](double t) { return ((A * t + Bn) * t + Cn) / ((A * t + Bd) * t + Cd); };
    double best = std::max(val(0.0), val(1.0));
    const double qa = A * (Bd - Bn);
    const double qb = 2.0 * A * (Cd - Cn);
    const double qc = Bn * Cd - Bd * Cn;
    if (std::fabs(qa) < eps_degenerate * std::max(1.0, std::fabs(qb) + std::fabs(qc))) {
        if (std::fabs(qb) > eps_degenerate) {
            const double t = -qc / qb;
            if (t > 0.0 && t < 1.0) best = std::max(best, val(t));
        }
    } else {
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc >= 0.0) {
            const double sd = std::sqrt(disc);
            for (const double t : {(-qb + sd) / (2.0 * qa), (-qb - sd) / (2.0 * qa)})
                if (t > 0.0 && t < 1.0) best = std::max(best, val(t));
        }
    }
    return best;
}

inline double ratio_sup(const ConvexPolygon& poly, cplx num, cplx den) {
    double best = 0.0;
    const int n = static_cast<int>(poly.size());
    for (int i = 0; i < n; ++i) {
        const cplx p = poly.vertices()[static_cast<std::size_t>(i)];
        const cplx q = poly.vertices()[static_cast<std::size_t>((i + 1) % n)];
        best = std::max(best, edge_ratio_max(p, q, num, den));
    }
    return best;
}

inline int nested_grid(int budget) {
    int g = 16;
    const int target = static_cast<int>(std::floor(std::sqrt(std::max(1.0, static_cast<double>(budget)))));
    while (2 * g <= target && g < 256) g *= 2;
    return g;
}

}  // namespace detail

// ===== Apollonian metric =====

// alpha_D(a, b) = sup_x log(|x-b|/|x-a|) + sup_y log(|y-a|/|y-b|), x, y on the
// boundary. On the unit ball this equals the hyperbolic metric; on a polygon
// each supremum is attained on an edge and solved in closed form.
inline double apollonian(const ConvexDomain& D, const Vec& a, const Vec& b) {
    require_interior(D, a, "apollonian: a");
    require_interior(D, b, "apollonian: b");
    if (dist(a, b) < eps_degenerate) return 0.0;
    if (is_ball(D)) return rho_ball(a, b);
    const auto& poly = std::get<ConvexPolygon>(D);
    const cplx ca = to_cplx(a), cb = to_cplx(b);
    return 0.5 * std::log(detail::ratio_sup(poly, cb, ca)) +
           0.5 * std::log(detail::ratio_sup(poly, ca, cb));
}

inline double apollonian(const ConvexDomain& D, cplx a, cplx b) {
    return apollonian(D, to_vec(a), to_vec(b));
}

// Boundary-sampled evaluation of the same supremum, independent of the closed
// form; grid scan per term with golden-section refinement.
struct ApollonianSearch {
    double value = 0.0;
    cplx x{};  // maximizer of log(|x-b|/|x-a|)
    cplx y{};  // maximizer of log(|y-a|/|y-b|)
    int grid = 0;
};

inline ApollonianSearch apollonian_sampled(const ConvexDomain& D, cplx a, cplx b,
                                           int samples = 4096) {
    require_interior(D, to_vec(a), "apollonian_sampled: a");
    require_interior(D, to_vec(b), "apollonian_sampled: b");
    ApollonianSearch out;
    out.grid = std::clamp(samples, 64, 1 << 20);
    if (std::abs(a - b) < eps_degenerate) {
        out.x = out.y = detail::boundary_at(D, 0.0);
        return out;
    }
    const double P = detail::boundary_period(D);
    auto term = [&](cplx num, cplx den, double s) {
        const cplx x = detail::boundary_at(D, s);
        return std::log(std::abs(x - num)) - std::log(std::abs(x - den));
    };
    auto [v1, s1] = detail::boundary_line_max(
        [&](double s) { return term(b, a, s); }, P, out.grid);
    auto [v2, s2] = detail::boundary_line_max(
        [&](double s) { return term(a, b, s); }, P, out.grid);
    out.value = v1 + v2;
    out.x = detail::boundary_at(D, s1);
    out.y = detail::boundary_at(D, s2);
    return out;
}

// ===== Möbius (Seittenranta) metric =====

// delta_D(a, b) = log(1 + sup |u-v||a-b| / (|u-a||v-b|)) over boundary pairs.
// The sampled search scans a nested g x g grid (g a power of two, so a larger
// budget never loses grid points), keeps the best 16 cells, and polishes each
// by alternating golden-section sweeps one coordinate at a time.
struct DeltaSearch {
    double value = 0.0;
    cplx u{}, v{};
    int grid = 0;
};

inline DeltaSearch mobius_delta_sampled(const ConvexDomain& D, cplx a, cplx b,
                                        int budget = 4096) {
    require_interior(D, to_vec(a), "mobius_delta_sampled: a");
    require_interior(D, to_vec(b), "mobius_delta_sampled: b");
    DeltaSearch out;
    out.grid = detail::nested_grid(budget);
    if (std::abs(a - b) < eps_degenerate) {
        out.u = out.v = detail::boundary_at(D, 0.0);
        return out;
    }
    const double P = detail::boundary_period(D);
    const double ab = std::abs(a - b);
    auto qval = [&](double s, double t) -> double {
        const cplx u = detail::boundary_at(D, s);
        const cplx v = detail::boundary_at(D, t);
        const double du = std::abs(u - a), dv = std::abs(v - b);
        if (du < 1e-15 || dv < 1e-15) return -1e300;
        return std::abs(u - v) * ab / (du * dv);
    };
    struct Cell {
        double q, s, t;
    };
    std::vector<Cell> top;
    const int keep = 16;
    const int g = out.grid;
    for (int i = 0; i < g; ++i) {
        const double s = P * i / g;
        for (int j = 0; j < g; ++j) {
            const double t = P * j / g;
            const double q = qval(s, t);
            if (static_cast<int>(top.size()) < keep) {
                top.push_back({q, s, t});
                std::sort(top.begin(), top.end(),
                          [](const Cell& x, const Cell& y) { return x.q > y.q; });
            } else if (q > top.back().q) {
                top.back() = {q, s, t};
                std::sort(top.begin(), top.end(),
                          [](const Cell& x, const Cell& y) { return x.q > y.q; });
            }
        }
    }
    const double w = P / g;
    double best_q = -1e300, best_s = 0.0, best_t = 0.0;
    for (const Cell& cell : top) {
        double s = cell.s, t = cell.t;
        for (int sweep = 0; sweep < 4; ++sweep) {
            s = detail::golden_max([&](double x) { return qval(x, t); }, s - w, s + w, 36).second;
            t = detail::golden_max([&](double x) { return qval(s, x); }, t - w, t + w, 36).second;
        }
        const double q = qval(s, t);
        if (q > best_q) { best_q = q; best_s = s; best_t = t; }
    }
    out.value = std::log1p(std::max(0.0, best_q));
    out.u = detail::boundary_at(D, best_s);
    out.v = detail::boundary_at(D, best_t);
    return out;
}

// On the unit ball delta equals the hyperbolic metric; polygons fall back to
// the sampled search.
inline double mobius_delta(const ConvexDomain& D, const Vec& a, const Vec& b,
                           int budget = 4096) {
    require_interior(D, a, "mobius_delta: a");
    require_interior(D, b, "mobius_delta: b");
    if (dist(a, b) < eps_degenerate) return 0.0;
    if (is_ball(D)) return rho_ball(a, b);
    return mobius_delta_sampled(D, to_cplx(a), to_cplx(b), budget).value;
}

// ===== Cross-metric report =====

// Sampled alpha and delta against their closed forms, plus the inequality
// chain alpha <= delta <= log(e^alpha + 2); on the ball also
// alpha/2 <= rho <= 4 sinh(alpha/2) with the sampled alpha.
inline MetricReport related_metrics_report(const ConvexDomain& D, cplx a, cplx b,
                                           int budget = 4096) {
    MetricReport rep;
    rep.title = "apollonian and mobius metrics";
    const double alpha = apollonian(D, to_vec(a), to_vec(b));
    const ApollonianSearch as = apollonian_sampled(D, a, b, std::max(64, budget / 4));
    const DeltaSearch ds = mobius_delta_sampled(D, a, b, budget);
    rep.put("alpha", alpha);
    rep.put("alpha_sampled", as.value);
    rep.put("delta_sampled", ds.value);
    rep.put("grid", ds.grid);
    rep.note("delta_u", fmt_point(ds.u));
    rep.note("delta_v", fmt_point(ds.v));
    rep.check("alpha_sampled_gap", std::fabs(as.value - alpha), 1e-6);
    // The sampled delta sits below the true supremum, so the chain is tested
    // with one-sided slack on the lower piece only.
    rep.check("chain_alpha_le_delta", std::max(0.0, alpha - ds.value), 1e-6);
    rep.check("chain_delta_le_log", std::max(0.0, ds.value - std::log(std::exp(alpha) + 2.0)), 1e-12);
    if (is_ball(D)) {
        const double rho = rho_ball(to_vec(a), to_vec(b));
        rep.put("rho", rho);
        rep.check("delta_vs_rho", std::fabs(ds.value - rho), 1e-6);
        rep.check("bthm_lower", std::max(0.0, 0.5 * as.value - rho), 1e-9);
        rep.check("bthm_upper", std::max(0.0, rho - 4.0 * std::sinh(0.5 * as.value)), 1e-6);
    }
    return rep;
}

}  // namespace hilmet
