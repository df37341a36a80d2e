#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

#include "hilmet/point.hpp"

namespace hilmet {

// Splittable deterministic random stream (splitmix64 core).
// Identical seeds give identical draws on every platform, which keeps
// sampled verification reports byte-reproducible.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Independent stream derived from this one and a tag.
    Rng split(std::string_view tag) const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (char c : tag) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        Rng r(state ^ h);
        r.next();
        return r;
    }

    cplx on_circle() {
        const double t = uniform(0.0, 2.0 * M_PI);
        return {std::cos(t), std::sin(t)};
    }

    // Area-uniform in the closed disk of the given radius.
    cplx in_disk(double rmax) {
        const double r = rmax * std::sqrt(uniform());
        return r * on_circle();
    }

    // Volume-uniform in the n-ball of the given radius (rejection from the cube).
    Vec in_ball(int n, double rmax) {
        Vec x(static_cast<std::size_t>(n));
        for (;;) {
            double s = 0.0;
            for (auto& c : x) {
                c = uniform(-1.0, 1.0);
                s += c * c;
            }
            if (s <= 1.0) {
                for (auto& c : x) c *= rmax;
                return x;
            }
        }
    }

    // Uniform direction orthogonal to the given unit vector.
    Vec unit_orthogonal(const Vec& axis) {
        for (;;) {
            Vec w = in_ball(static_cast<int>(axis.size()), 1.0);
            const double a = dot(w, axis);
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= a * axis[i];
            const double n2 = norm2(w);
            if (n2 > 1e-12) return mul(w, 1.0 / std::sqrt(n2));
        }
    }
};

}  // namespace hilmet
