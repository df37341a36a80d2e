#pragma once

#include <cfloat>
#include <cmath>
#include <string>

#include "hilmet/geometry.hpp"
#include "hilmet/hilbert.hpp"
#include "hilmet/report.hpp"
#include "hilmet/rng.hpp"

namespace hilmet {

// ===== Arithmetic-geometric mean and complete elliptic integrals =====

inline double agm(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0)) throw OutOfDomain("agm: arguments must be positive");
    double a = std::max(x, y), g = std::min(x, y);
    for (int i = 0; i < 64 && a - g > 4.0 * DBL_EPSILON * a; ++i) {
        const double an = 0.5 * (a + g);
        g = std::sqrt(a * g);
        a = an;
    }
    return 0.5 * (a + g);
}

// K(r) = pi / (2 agm(1, sqrt(1-r^2))), complete elliptic integral of the first kind.
inline double ell_K(double r) {
    if (!(r >= 0.0) || r >= 1.0) throw OutOfDomain("ell_K: modulus must be in [0, 1)");
    if (r == 0.0) return M_PI / 2.0;
    return M_PI / (2.0 * agm(1.0, std::sqrt((1.0 - r) * (1.0 + r))));
}

namespace detail {

// mu with the complementary modulus supplied, avoiding cancellation near r = 1.
inline double mu_of(double r, double rp) {
    return M_PI / 2.0 * agm(1.0, rp) / agm(1.0, r);
}

}  // namespace detail

// Grötzsch modulus mu(r) = (pi/2) K(sqrt(1-r^2)) / K(r), decreasing on (0, 1).
inline double grotzsch_mu(double r) {
    if (!(r > 0.0) || !(r < 1.0)) throw OutOfDomain("grotzsch_mu: argument must be in (0, 1)");
    return detail::mu_of(r, std::sqrt((1.0 - r) * (1.0 + r)));
}

// Inverse of mu. For y < pi/2 uses mu(r) mu(r') = pi^2/4 to move the root away
// from 1; the main branch bisects log r so tiny roots keep full relative accuracy.
inline double mu_inv(double y) {
    if (!(y > 0.0)) throw OutOfDomain("mu_inv: argument must be positive");
    if (y > 700.0) throw OutOfDomain("mu_inv: argument too large for double range");
    if (y < M_PI / 2.0) {
        const double rp = mu_inv(M_PI * M_PI / (4.0 * y));
        return std::sqrt((1.0 - rp) * (1.0 + rp));
    }
    // Root lies in (0, 1/sqrt(2)]; log(4) - y - 1 brackets it from below.
    double t_lo = std::log(4.0) - y - 1.0;
    double t_hi = -0.5 * std::log(2.0);
    for (int i = 0; i < 200 && t_hi - t_lo > 1e-16 * std::max(1.0, std::fabs(t_lo)); ++i) {
        const double mid = 0.5 * (t_lo + t_hi);
        (grotzsch_mu(std::exp(mid)) > y ? t_lo : t_hi) = mid;
    }
    const double r = std::exp(0.5 * (t_lo + t_hi));
    if (std::fabs(grotzsch_mu(r) - y) > 1e-13 * std::max(1.0, y))
        throw ConvergenceFailure("mu_inv: residual above tolerance at y = " + fmt_g(y, 6));
    return r;
}

// Grötzsch ring modulus gamma_2(s) = 2 pi / mu(1/s), decreasing on (1, inf).
inline double gamma2(double s) {
    if (!(s > 1.0)) throw OutOfDomain("gamma2: argument must be > 1");
    const double r = 1.0 / s;
    const double rp = std::sqrt((s - 1.0) * (s + 1.0)) / s;
    return 2.0 * M_PI / detail::mu_of(r, rp);
}

// Inverse of gamma_2 by direct bisection on log s. Kept independent of mu_inv
// so the two phi_K evaluation routes share no root-finding code.
inline double gamma2_inv(double y) {
    if (!(y > 0.0)) throw OutOfDomain("gamma2_inv: argument must be positive");
    double t_lo = std::log1p(1e-16);
    double t_hi = std::max(std::log(4.0), 2.0 * M_PI / y);
    if (gamma2(std::exp(t_hi)) >= y) t_hi += 3.0;  // widen: gamma2 decays like 2pi/log(4s)
    for (int i = 0; i < 200 && t_hi - t_lo > 1e-16 * std::max(1.0, t_hi); ++i) {
        const double mid = 0.5 * (t_lo + t_hi);
        (gamma2(std::exp(mid)) > y ? t_lo : t_hi) = mid;
    }
    return std::exp(0.5 * (t_lo + t_hi));
}

// ===== Hersch-Pfluger distortion function =====

// phi_K(r) = mu_inv(mu(r)/K) with phi_K(0) = 0, phi_K(1) = 1.
inline double phi_k(double K, double r) {
    if (!(K >= 1.0)) throw OutOfDomain("phi_k: K must be >= 1");
    if (!(r >= 0.0) || !(r <= 1.0)) throw OutOfDomain("phi_k: r must be in [0, 1]");
    if (r == 0.0) return 0.0;
    if (r == 1.0) return 1.0;
    return mu_inv(grotzsch_mu(r) / K);
}

// Same value through the ring modulus: phi_K(r) = 1 / gamma2_inv(K gamma2(1/r)).
inline double phi_k_via_gamma2(double K, double r) {
    if (!(K >= 1.0)) throw OutOfDomain("phi_k_via_gamma2: K must be >= 1");
    if (!(r > 0.0) || !(r < 1.0))
        throw OutOfDomain("phi_k_via_gamma2: r must be in (0, 1)");
    return 1.0 / gamma2_inv(K * gamma2(1.0 / r));
}

// ===== The Hölder constant c(K) and its bounds =====

// c(K) = 2 artanh(phi_K(tanh(1/2))); c(1) = 1.
inline double holder_constant(double K) {
    return 2.0 * atanh_checked(phi_k(K, std::tanh(0.5)));
}

// u = arcosh(e) tanh(arcosh(e)) and v = log(2(1 + sqrt(1 - 1/e^2))) pin the
// linear envelopes of c(K).
inline double holder_u_constant() {
    const double t = std::acosh(M_E);
    return t * std::tanh(t);
}

inline double holder_v_constant() {
    return std::log(2.0 * (1.0 + std::sqrt(1.0 - std::exp(-2.0))));
}

// Chain K <= u(K-1)+1 <= log(cosh(K arcosh e)) <= c(K) <= v(K-1)+K.
struct HolderBounds {
    double K = 1.0;
    double linear_lower = 0.0;
    double cosh_lower = 0.0;
    double value = 0.0;
    double linear_upper = 0.0;
};

inline HolderBounds holder_constant_bounds(double K) {
    if (!(K >= 1.0)) throw OutOfDomain("holder_constant_bounds: K must be >= 1");
    HolderBounds b;
    b.K = K;
    b.linear_lower = holder_u_constant() * (K - 1.0) + 1.0;
    b.cosh_lower = std::log(std::cosh(K * std::acosh(M_E)));
    b.value = holder_constant(K);
    b.linear_upper = holder_v_constant() * (K - 1.0) + K;
    return b;
}

// Ratio 2 arsinh(c sinh(t/2)) / (c t); monotone in t with range between 1 and 1/c.
inline double stretch_ratio(double c, double t) {
    if (!(c > 0.0) || !(t > 0.0)) throw OutOfDomain("stretch_ratio: c and t must be positive");
    return 2.0 * std::asinh(c * std::sinh(t / 2.0)) / (c * t);
}

// ===== Hölder continuity bound for quasiregular self-maps of the disk =====

// Right side of h(f(a), f(b)) <= (2 c(K) / sqrt(1 - m^2)) max(h, h^(1/K)),
// where h = h_ball(a, b) and m is the distance from the origin to the line a b.
inline double holder_bound_rhs(cplx a, cplx b, double K, double cK) {
    if (std::abs(a - b) < eps_degenerate) return 0.0;
    const double h = h_ball(a, b);
    const double m = dist_origin_line(a, b);
    const double amp = 2.0 * cK / std::sqrt((1.0 - m) * (1.0 + m));
    return amp * std::max(h, std::pow(h, 1.0 / K));
}

inline double holder_bound_rhs(cplx a, cplx b, double K) {
    return holder_bound_rhs(a, b, K, holder_constant(K));
}

// ===== Quasiregular map catalog =====

enum class MapKind { identity, mobius, power, radial_stretch };

// Self-maps of the unit disk with known maximal dilatation:
// identity and mobius are conformal, z -> z^m is 1-quasiregular (m-to-one),
// the radial stretch z -> z |z|^(K-1) is K-quasiconformal.
struct QCMapSpec {
    MapKind kind = MapKind::identity;
    cplx a{0.5, 0.0};  // mobius parameter
    int m = 2;         // power exponent
    double K = 2.0;    // stretch exponent
};

inline double qc_map_distortion(const QCMapSpec& spec) {
    return spec.kind == MapKind::radial_stretch ? spec.K : 1.0;
}

inline std::string qc_map_name(const QCMapSpec& spec) {
    switch (spec.kind) {
        case MapKind::identity: return "identity";
        case MapKind::mobius: return "mobius(" + fmt_g(spec.a.real(), 6) + "," + fmt_g(spec.a.imag(), 6) + ")";
        case MapKind::power: return "power(" + std::to_string(spec.m) + ")";
        case MapKind::radial_stretch: return "radial-stretch(" + fmt_g(spec.K, 6) + ")";
    }
    return "?";
}

inline cplx qc_map_eval(const QCMapSpec& spec, cplx z) {
    switch (spec.kind) {
        case MapKind::identity:
            return z;
        case MapKind::mobius:
            return mobius_to_origin(spec.a, z);
        case MapKind::power: {
            if (spec.m < 1) throw OutOfDomain("power map: exponent must be >= 1");
            cplx w{1.0, 0.0};
            for (int i = 0; i < spec.m; ++i) w *= z;
            return w;
        }
        case MapKind::radial_stretch: {
            if (!(spec.K >= 1.0)) throw OutOfDomain("radial stretch: K must be >= 1");
            const double r = std::abs(z);
            if (r < eps_degenerate) return {0.0, 0.0};
            return z * std::pow(r, spec.K - 1.0);
        }
    }
    throw Error("qc_map_eval: unknown map kind");
}

// Sampled verification of the Hölder bound for one catalog map: the margin
// rhs - h(f(a), f(b)) must stay >= -1e-9 over every sampled pair. Whether the
// halved bound rhs/2 ever fails is recorded as exploratory data only.
inline MetricReport holder_verify(const QCMapSpec& spec, double K, int pairs, std::uint64_t seed) {
    if (!(K >= qc_map_distortion(spec)))
        throw OutOfDomain("holder_verify: K = " + fmt_g(K, 6) + " is below the map distortion " +
                          fmt_g(qc_map_distortion(spec), 6));
    const double cK = holder_constant(K);
    Rng rng(seed);
    double min_margin = 1e300;
    cplx worst_a{}, worst_b{};
    int halved_fail = 0;
    int done = 0;
    while (done < pairs) {
        const cplx a = rng.in_disk(0.99);
        const cplx b = rng.in_disk(0.99);
        if (std::abs(a - b) < 1e-12) continue;
        const double rhs = holder_bound_rhs(a, b, K, cK);
        const double lhs = h_ball(qc_map_eval(spec, a), qc_map_eval(spec, b));
        const double margin = rhs - lhs;
        if (margin < min_margin) {
            min_margin = margin;
            worst_a = a;
            worst_b = b;
        }
        if (lhs > 0.5 * rhs) ++halved_fail;
        ++done;
    }
    MetricReport rep;
    rep.title = "holder bound: " + qc_map_name(spec);
    rep.note("map", qc_map_name(spec));
    rep.note("worst_a", fmt_point(worst_a));
    rep.note("worst_b", fmt_point(worst_b));
    rep.put("K", K);
    rep.put("c_K", cK);
    rep.put("pairs", pairs);
    rep.put("min_margin", min_margin);
    rep.put("halved_bound_failures", halved_fail);
    rep.pass = min_margin >= -1e-9;
    return rep;
}

}  // namespace hilmet
