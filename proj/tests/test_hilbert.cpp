#include "catch2/catch_amalgamated.hpp"

#include "hilmet/hilbert.hpp"
#include "hilmet/hyperbolic.hpp"
#include "hilmet/presets.hpp"
#include "hilmet/rng.hpp"

using namespace hilmet;

TEST_CASE("hilbert distance pinned values on the disk") {
    CHECK(h_ball(cplx{0, 0}, cplx{0.5, 0}) == Catch::Approx(std::log(3.0)).epsilon(1e-14));
    // Orthogonal pair at height 1/2: cosh(h/2) = 2.
    CHECK(h_ball(cplx{0.5, 0.5}, cplx{-0.5, 0.5}) ==
          Catch::Approx(2.0 * std::acosh(2.0)).epsilon(1e-12));
    CHECK(h_ball(cplx{0.1, -0.2}, cplx{0.1, -0.2}) == 0.0);
}

TEST_CASE("hilbert distance on the square matches the interval cross ratio") {
    const ConvexDomain sq = axis_square();
    CHECK(hilbert_distance(sq, cplx{0, 0}, cplx{0.5, 0}) ==
          Catch::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(hilbert_distance(sq, cplx{0.25, 0.25}, cplx{0.25, 0.25}) == 0.0);
    // Symmetry and the triangle inequality on sampled triples.
    Rng rng(61);
    for (int i = 0; i < 500; ++i) {
        const cplx a{rng.uniform(-0.95, 0.95), rng.uniform(-0.95, 0.95)};
        const cplx b{rng.uniform(-0.95, 0.95), rng.uniform(-0.95, 0.95)};
        const cplx c{rng.uniform(-0.95, 0.95), rng.uniform(-0.95, 0.95)};
        if (std::abs(a - b) < 1e-6 || std::abs(b - c) < 1e-6 || std::abs(a - c) < 1e-6) continue;
        CHECK(hilbert_distance(sq, a, b) == Catch::Approx(hilbert_distance(sq, b, a)).margin(1e-12));
        CHECK(hilbert_distance(sq, a, c) <=
              hilbert_distance(sq, a, b) + hilbert_distance(sq, b, c) + 1e-10);
    }
}

TEST_CASE("chord evaluation agrees with the closed disk form") {
    const ConvexDomain disk = BallDomain{2};
    Rng rng(67);
    for (int i = 0; i < 5000; ++i) {
        const cplx a = rng.in_disk(0.995), b = rng.in_disk(0.995);
        if (std::abs(a - b) < 1e-9) continue;
        CHECK(std::fabs(h_chord(disk, a, b) - h_ball(a, b)) < 1e-9);
    }
}

TEST_CASE("disk chord data orders u, a, b, v") {
    const ChordB2 ch = h_geodesic_chord({0.5, 0.1}, {-0.2, 0.1});
    CHECK(std::fabs(std::abs(ch.u) - 1.0) < 1e-12);
    CHECK(std::fabs(std::abs(ch.v) - 1.0) < 1e-12);
    CHECK(std::fabs(std::abs(ch.c) - dist_origin_line(cplx{0.5, 0.1}, cplx{-0.2, 0.1})) < 1e-12);
    CHECK(std::abs(ch.u - cplx{0.5, 0.1}) < std::abs(ch.u - cplx{-0.2, 0.1}));
    CHECK_THROWS_AS(h_geodesic_chord({0.1, 0}, {0.1, 0}), DegenerateInput);
}

TEST_CASE("hilbert midpoint bisects the metric in ball and polygon domains") {
    const ConvexDomain disk = BallDomain{2};
    const ConvexDomain tri = inscribed_triangle();
    Rng rng(71);
    for (int i = 0; i < 1000; ++i) {
        const cplx a = rng.in_disk(0.9), b = rng.in_disk(0.9);
        if (std::abs(a - b) < 1e-6) continue;
        const cplx m = hilbert_midpoint(disk, a, b);
        CHECK(std::fabs(hilbert_distance(disk, a, m) - hilbert_distance(disk, m, b)) < 1e-9);
        if (std::get<ConvexPolygon>(tri).contains(a, 1e-3) &&
            std::get<ConvexPolygon>(tri).contains(b, 1e-3)) {
            const cplx mt = hilbert_midpoint(tri, a, b);
            CHECK(std::fabs(hilbert_distance(tri, a, mt) - hilbert_distance(tri, mt, b)) < 1e-9);
        }
    }
    // On a diameter h = rho, so the two midpoint notions coincide there.
    const cplx dir = std::polar(1.0, 0.7);
    const cplx a = 0.6 * dir, b = -0.2 * dir;
    CHECK(std::abs(hilbert_midpoint(disk, a, b) - hyp_midpoint(a, b)) < 1e-9);
}

TEST_CASE("tangency points sit on the circle on opposite sides of the chord") {
    Rng rng(73);
    for (int i = 0; i < 2000; ++i) {
        const cplx a = rng.in_disk(0.95), b = rng.in_disk(0.95);
        if (std::abs(a - b) < 1e-4) continue;
        const auto [w1, w2] = tangency_points(a, b);
        CHECK(std::fabs(std::abs(w1) - 1.0) < 1e-10);
        CHECK(std::fabs(std::abs(w2) - 1.0) < 1e-10);
        // Internal tangency of the circumcircle through a, b, w.
        for (const cplx w : {w1, w2}) {
            const Circle2 c = circle_through(a, b, w);
            CHECK(std::fabs(std::abs(c.center) + c.radius - 1.0) < 1e-9);
        }
        CHECK(cross(b - a, w1 - a) * cross(b - a, w2 - a) <= 0.0);
    }
    CHECK_THROWS_AS(tangency_points({0.2, 0}, {0.2, 0}), DegenerateInput);
}

TEST_CASE("chordal projection maps circle points onto the chord through u, v") {
    Rng rng(79);
    for (int i = 0; i < 1000; ++i) {
        const cplx u = rng.on_circle(), v = rng.on_circle();
        const cplx w = rng.on_circle(), z = rng.on_circle();
        if (std::abs(u - v) < 0.05 || std::abs(w - u) < 0.05 || std::abs(w - v) < 0.05) continue;
        if (std::abs(-w * z + u * v) < 0.05) continue;
        const cplx fu = chordal_projection(u, v, w, u);
        const cplx fv = chordal_projection(u, v, w, v);
        CHECK(std::abs(fu - u) < 1e-9);
        CHECK(std::abs(fv - v) < 1e-9);
        const cplx fz = chordal_projection(u, v, w, z);
        // Central projection from w: F(z) = line(u,v) intersect line(w,z).
        const cplx li = line_intersection(u, v, w, z);
        CHECK(std::abs(fz - li) / std::max(1.0, std::abs(fz)) < 1e-9);
        CHECK(std::fabs(cross(fz - u, v - u)) / std::max(1.0, std::abs(fz)) < 1e-8);
        // F(z) is collinear with z and w.
        if (std::abs(z - w) > 0.05)
            CHECK(std::fabs(cross(fz - z, w - z)) / std::max(1.0, std::abs(fz)) < 1e-8);
    }
    CHECK_THROWS_AS(chordal_projection({0.5, 0}, {0, 1}, {-1, 0}, {0, -1}), NotOnCircle);
}

TEST_CASE("second intersection is a boundary involution through p") {
    Rng rng(83);
    const cplx p{0.3, -0.2};
    for (int i = 0; i < 1000; ++i) {
        const cplx z = rng.on_circle();
        const cplx f = second_intersection(p, z);
        CHECK(std::fabs(std::abs(f) - 1.0) < 1e-12);
        CHECK(std::fabs(cross(f - p, z - p)) < 1e-10);  // collinear with p
        CHECK(std::abs(second_intersection(p, f) - z) < 1e-10);  // involution
    }
    CHECK_THROWS_AS(second_intersection({0.3, 0}, {0.5, 0}), NotOnCircle);
}

TEST_CASE("hilbert spheres of the ball are ellipsoids of revolution") {
    // Centered case collapses to a sphere of radius th(R/2).
    const EllipsoidSpec cen = hilbert_sphere_ellipsoid(Vec{0.0, 0.0, 0.0}, 2.0);
    CHECK(cen.a_min == Catch::Approx(std::tanh(1.0)).epsilon(1e-14));
    CHECK(cen.a_max == Catch::Approx(std::tanh(1.0)).epsilon(1e-14));
    CHECK(norm(cen.center) < 1e-15);

    // Pinned example: c = 0.5 e1, R = log 3.
    const EllipsoidSpec e = hilbert_sphere_ellipsoid(Vec{0.5, 0.0}, std::log(3.0));
    CHECK(e.center[0] == Catch::Approx(0.4).epsilon(1e-13));
    CHECK(e.a_min == Catch::Approx(0.4).epsilon(1e-13));
    CHECK(e.a_max == Catch::Approx(std::sqrt(0.2)).epsilon(1e-12));

    // Sampled surface points lie at Hilbert distance R from c, any dimension.
    Rng rng(89);
    for (const int n : {2, 3, 5}) {
        for (int i = 0; i < 50; ++i) {
            const Vec c = rng.in_ball(n, 0.85);
            const double R = rng.uniform(0.1, 3.0);
            const EllipsoidSpec s = hilbert_sphere_ellipsoid(c, R);
            for (int j = 0; j < 20; ++j) {
                const Vec x = ellipsoid_point(s, rng.uniform(0.0, 2.0 * M_PI),
                                              rng.unit_orthogonal(s.axis));
                CHECK(std::fabs(h_ball(x, c) - R) < 1e-9);
                CHECK(std::fabs(sphere_identity_residual(c, R, x)) < 1e-10);
            }
        }
    }
    CHECK_THROWS_AS(hilbert_sphere_ellipsoid(Vec{1.2, 0.0}, 1.0), OutOfDomain);
}

TEST_CASE("ball boundary polyline radius and failure modes") {
    const ConvexDomain disk = BallDomain{2};
    const Polyline poly = hilbert_ball_boundary(disk, {0, 0}, 1.6, 90);
    REQUIRE(poly.points.size() == 90);
    CHECK(poly.closed);
    for (const cplx& p : poly.points)
        CHECK(std::fabs(std::abs(p) - std::tanh(0.8)) < 1e-9);
    CHECK_THROWS_AS(hilbert_ball_boundary(disk, {0, 0}, 1.0, 2), DegenerateInput);
    CHECK_THROWS_AS(hilbert_ball_boundary(disk, {1.5, 0}, 1.0, 16), OutsideDomain);
    CHECK_THROWS_AS(hilbert_ball_boundary(disk, {0, 0}, 60.0, 16), ConvergenceFailure);
}

TEST_CASE("chord length bound margins") {
    const ConvexDomain disk = BallDomain{2};
    const ConvexDomain sq = inscribed_square();
    Rng rng(97);
    for (int i = 0; i < 2000; ++i) {
        const cplx a = rng.in_disk(0.99), b = rng.in_disk(0.99);
        if (std::abs(a - b) < 1e-9) continue;
        CHECK(chord_length_margin(disk, a, b) >= -1e-12);
        if (std::get<ConvexPolygon>(sq).contains(a, 1e-3) &&
            std::get<ConvexPolygon>(sq).contains(b, 1e-3))
            CHECK(chord_length_margin(sq, a, b) >= -1e-12);
    }
    // Antipodal diameter pairs attain equality in the disk.
    CHECK(std::fabs(chord_length_margin(disk, cplx{0.7, 0}, cplx{-0.7, 0})) < 1e-12);
    // Domains must sit inside the closed unit disk.
    CHECK_THROWS_AS(chord_length_margin(ConvexDomain{axis_square()}, cplx{0, 0}, cplx{0.5, 0}),
                    DomainNotNormalized);
}
