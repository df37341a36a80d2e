#include "catch2/catch_amalgamated.hpp"

#include "hilmet/geometry.hpp"
#include "hilmet/hyperbolic.hpp"
#include "hilmet/rng.hpp"

using namespace hilmet;

TEST_CASE("hyperbolic distance pinned values") {
    CHECK(rho_ball(cplx{0, 0}, cplx{0.5, 0}) == Catch::Approx(std::log(3.0)).epsilon(1e-14));
    CHECK(rho_ball(Vec{0, 0, 0}, Vec{0.5, 0, 0}) == Catch::Approx(std::log(3.0)).epsilon(1e-14));
    CHECK(rho_ball(cplx{0.3, 0.2}, cplx{0.3, 0.2}) == 0.0);
    CHECK_THROWS_AS(rho_ball(cplx{1.0, 0.0}, cplx{0, 0}), OutOfDomain);
    CHECK_THROWS_AS(rho_ball(cplx{1.0 - 1e-12, 0.0}, cplx{0, 0}), NearBoundary);
}

TEST_CASE("hyperbolic distance is moebius invariant and symmetric") {
    Rng rng(23);
    for (int i = 0; i < 2000; ++i) {
        const cplx a = rng.in_disk(0.99), b = rng.in_disk(0.99), c = rng.in_disk(0.9);
        if (std::abs(c) < 1e-3) continue;
        CHECK(rho_ball(a, b) == Catch::Approx(rho_ball(b, a)).margin(1e-15));
        const cplx ta = mobius_to_origin(c, a), tb = mobius_to_origin(c, b);
        CHECK(rho_ball(ta, tb) == Catch::Approx(rho_ball(a, b)).margin(1e-9));
    }
}

TEST_CASE("half plane distance pinned value") {
    CHECK(rho_half_plane({0, 1}, {0, 2}) == Catch::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(rho_half_plane({0, 1e-14}, {0, 1}), NearBoundary);
}

TEST_CASE("geodesic endpoints realize the distance as a log cross ratio") {
    Rng rng(29);
    for (int i = 0; i < 2000; ++i) {
        const cplx a = rng.in_disk(0.95), b = rng.in_disk(0.95);
        if (std::abs(a - b) < 1e-4) continue;
        const GeodesicB2 g = geodesic_endpoints_ball(a, b);
        CHECK(std::fabs(std::abs(g.a_star) - 1.0) < 1e-10);
        CHECK(std::fabs(std::abs(g.b_star) - 1.0) < 1e-10);
        CHECK(std::abs(a - g.a_star) <= std::abs(b - g.a_star) + 1e-12);
        CHECK(std::log(cross_ratio(to_vec(g.a_star), to_vec(a), to_vec(b), to_vec(g.b_star))) ==
              Catch::Approx(rho_ball(a, b)).margin(1e-9));
    }
    // Collinear with the origin: the geodesic is a diameter.
    const GeodesicB2 g = geodesic_endpoints_ball({-0.3, 0}, {0.6, 0});
    CHECK(g.diameter);
    CHECK(std::abs(g.a_star - cplx{-1, 0}) < 1e-12);
    CHECK(std::abs(g.b_star - cplx{1, 0}) < 1e-12);
}

TEST_CASE("bracket and symmetric identity") {
    CHECK(a_bracket(cplx{0, 0}, cplx{0.7, 0.1}) == Catch::Approx(1.0).epsilon(1e-14));
    const cplx a{0.4, -0.2};
    CHECK(a_bracket(a, a) == Catch::Approx(1.0 - std::norm(a)).epsilon(1e-13));
    CHECK(a_bracket(cplx{0.5, 0}, cplx{0, 0.5}) ==
          Catch::Approx(std::sqrt(1.0625)).epsilon(1e-13));
    Rng rng(31);
    for (int i = 0; i < 2000; ++i) {
        const cplx x = rng.in_disk(1.0), y = rng.in_disk(1.0);
        // Planar speciality: the bracket equals |1 - conj(x) y|.
        CHECK(a_bracket(x, y) == Catch::Approx(std::abs(1.0 - std::conj(x) * y)).margin(1e-12));
        CHECK(siden_residual(x, y) < 1e-12);
        CHECK(siden_residual(to_vec(x), to_vec(y)) < 1e-12);
    }
}

TEST_CASE("hyperbolic midpoint pinned values and bisection property") {
    CHECK(std::abs(hyp_midpoint({0.5, 0}, {-0.5, 0})) < 1e-14);
    CHECK(std::abs(hyp_midpoint({0, 0}, {0.8, 0}) - cplx{0.5, 0}) < 1e-14);
    Rng rng(37);
    for (int i = 0; i < 2000; ++i) {
        const cplx a = rng.in_disk(0.99), b = rng.in_disk(0.99);
        if (std::abs(a - b) < 1e-6) continue;
        const cplx m = hyp_midpoint(a, b);
        CHECK(std::fabs(rho_ball(a, m) - rho_ball(m, b)) < 1e-9);
        CHECK(std::fabs(rho_ball(a, m) - 0.5 * rho_ball(a, b)) < 1e-9);
    }
}

TEST_CASE("tangent meeting point pinned values") {
    CHECK(std::abs(tangent_meet({0, 0}, {0.8, 0}) - cplx{0.4, 0}) < 1e-14);
    CHECK(std::abs(tangent_meet({0.3, 0.1}, {-0.3, -0.1})) < 1e-14);
    CHECK(std::abs(tangent_meet({0.5, 0.5}, {-0.5, 0.5}) - cplx{0, 0.25}) < 1e-14);
    // Equidistant from both inputs.
    Rng rng(41);
    for (int i = 0; i < 1000; ++i) {
        const cplx a = rng.in_disk(0.9), b = rng.in_disk(0.9);
        if (std::abs(a - b) < 1e-3 || std::abs(a + b) < 1e-3) continue;
        const cplx cen = tangent_meet(a, b);
        CHECK(std::fabs(std::abs(cen - a) - std::abs(cen - b)) < 1e-10);
    }
}

TEST_CASE("chord foot pinned values and collinearity") {
    CHECK(std::abs(chord_foot({0, 0}, {0.8, 0}) - cplx{0.8 / 1.36, 0}) < 1e-14);
    CHECK(std::abs(chord_foot({0.2, 0.6}, {-0.2, -0.6})) < 1e-14);
    Rng rng(43);
    for (int i = 0; i < 1000; ++i) {
        const cplx a = rng.in_disk(0.95), b = rng.in_disk(0.95);
        if (std::abs(a - b) < 1e-3) continue;
        const cplx p = chord_foot(a, b);
        CHECK(std::fabs(cross(p - a, b - a)) < 1e-12);  // p on the line through a, b
        CHECK(std::abs(p - a) + std::abs(p - b) <= std::abs(a - b) + 1e-12);  // on the segment
    }
}

TEST_CASE("euclidean image of a hyperbolic disk") {
    const EuclideanDisk e = hyp_disk_to_euclidean({0.5, 0}, std::log(3.0));
    CHECK(e.t == Catch::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(e.center - cplx{0.4, 0}) < 1e-13);
    CHECK(e.radius == Catch::Approx(0.4).epsilon(1e-13));
    // Centered case: radius th(M/2).
    const EuclideanDisk c = hyp_disk_to_euclidean({0, 0}, 2.0);
    CHECK(std::abs(c.center) < 1e-15);
    CHECK(c.radius == Catch::Approx(std::tanh(1.0)).epsilon(1e-14));
    // Points on the Euclidean circle sit at hyperbolic distance M from x.
    Rng rng(47);
    for (int i = 0; i < 500; ++i) {
        const cplx x = rng.in_disk(0.8);
        const double M = rng.uniform(0.1, 2.5);
        const EuclideanDisk d = hyp_disk_to_euclidean(x, M);
        const cplx on = d.center + d.radius * rng.on_circle();
        CHECK(rho_ball(x, on) == Catch::Approx(M).margin(1e-9));
    }
}

TEST_CASE("tangent meet, midpoint, and foot align with the metric disk") {
    // cen, m, p share a direction and cen bisects: rho(cen, m) = rho(m, p).
    Rng rng(53);
    for (int i = 0; i < 2000; ++i) {
        const cplx a = rng.in_disk(0.9), b = rng.in_disk(0.9);
        if (std::abs(a) < 1e-2 || std::abs(b) < 1e-2) continue;
        if (std::abs(a - b) < 1e-3 || std::abs(a + b) < 1e-3) continue;
        const MetricReport rep = midpoint_alignment_report(a, b);
        CHECK(rep.pass);
        const cplx cen = tangent_meet(a, b), m = hyp_midpoint(a, b), p = chord_foot(a, b);
        if (std::abs(cen) > 1e-6 && std::abs(m) > 1e-6 && std::abs(p) > 1e-6) {
            CHECK(std::fabs(cross(cen / std::abs(cen), m / std::abs(m))) < 1e-9);
            CHECK(std::fabs(cross(p / std::abs(p), m / std::abs(m))) < 1e-9);
        }
    }
    // Pinned example: rho(0.4, 0.5) = 2 arth(1/8) = rho(0.5, 0.8/1.36).
    CHECK(rho_ball(cplx{0.4, 0}, cplx{0.5, 0}) == Catch::Approx(2.0 * std::atanh(0.125)));
    CHECK(rho_ball(cplx{0.5, 0}, cplx{0.8 / 1.36, 0}) ==
          Catch::Approx(2.0 * std::atanh(0.125)).epsilon(1e-12));
}
