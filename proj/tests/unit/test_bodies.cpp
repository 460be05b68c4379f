// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "lpbm/body.hpp"
#include "lpbm/errors.hpp"
#include "lpbm/numeric.hpp"

using namespace lpbm;

TEST_CASE("lq ball membership and support") {
    const Body ellipse = Body::lq_ball(ExtReal(2.0), {2.0, 1.0});
    CHECK(ellipse.contains(Point{1.9, 0.0}));
    CHECK_FALSE(ellipse.contains(Point{2.1, 0.0}));
    CHECK(ellipse.contains(Point{-1.0, -0.8}));
    CHECK_FALSE(ellipse.contains(Point{1.5, 0.7}));
    Rng rng(1);
    for (int k = 0; k < 100; ++k) {
        const double t = rng.uniform(0.0, 2 * std::numbers::pi);
        const Point u{std::cos(t), std::sin(t)};
        // ellipse support: sqrt(a^2 u1^2 + b^2 u2^2)
        CHECK(ellipse.support(u) == doctest::Approx(std::sqrt(4 * u[0] * u[0] + u[1] * u[1])).epsilon(1e-12));
        // box support: sum r_i |u_i|; l1 support: max r_i |u_i|
        const Body box = Body::box({0.5, 3.0});
        CHECK(box.support(u) == doctest::Approx(0.5 * std::abs(u[0]) + 3 * std::abs(u[1])).epsilon(1e-12));
        const Body cross = Body::lq_ball(ExtReal(1.0), {0.5, 3.0});
        CHECK(cross.support(u) == doctest::Approx(std::max(0.5 * std::abs(u[0]), 3 * std::abs(u[1]))).epsilon(1e-12));
    }
    CHECK(ellipse.out_radius() == doctest::Approx(2.0));
    CHECK(Body::box({1.0, 1.0}).out_radius() == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(Body::lq_ball(ExtReal(0.5), {1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(Body::box({1.0, -1.0}), DomainError);
}

TEST_CASE("radial function") {
    const Body l1 = Body::lq_ball(ExtReal(1.0), {1.0, 1.0});
    CHECK(l1.radial(Point{1.0, 1.0}) == doctest::Approx(0.5).epsilon(1e-9));
    const Body l3 = Body::lq_ball(ExtReal(3.0), {1.0, 2.0});
    const Point d{1.0, 1.0};
    const double r = l3.radial(d);
    CHECK(std::pow(r, 3) * (1.0 + 1.0 / 8.0) == doctest::Approx(1.0).epsilon(1e-8));
    const auto ext = l3.octant_extent();
    CHECK(ext[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(ext[1] == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("H-polytope") {
    // |x| + |y| <= 1 written as one halfspace, plus |x| <= 0.8
    const Body p = Body::h_polytope({{{1.0, 1.0}, 1.0}, {{1.0, 0.0}, 0.8}});
    CHECK(p.contains(Point{0.7, 0.2}));
    CHECK_FALSE(p.contains(Point{0.85, 0.1}));
    CHECK_FALSE(p.contains(Point{-0.5, -0.6}));
    // vertices of the octant trace: (0,1), (0.8,0.2), (0.8,0)
    CHECK(p.support(Point{1.0, 0.0}) == doctest::Approx(0.8));
    CHECK(p.support(Point{0.0, 1.0}) == doctest::Approx(1.0));
    CHECK(p.support(Point{1.0, 0.2}) == doctest::Approx(std::max(0.2, 0.8 + 0.04)));
    CHECK(p.support(Point{-1.0, 0.2}) == doctest::Approx(0.84));
    CHECK(p.radial(Point{1.0, 1.0}) == doctest::Approx(0.5));
    CHECK_THROWS_AS(Body::h_polytope({{{1.0, 0.0}, 1.0}}), DomainError);
    CHECK_THROWS_AS(Body::h_polytope({{{1.0, 1.0}, -1.0}}), DomainError);
}

TEST_CASE("grid sets") {
    GridSet g(2, 4, {0.5, 0.5});
    const int idx[2] = {2, 1};
    g.mark(g.flat_index(idx));
    CHECK(g.marked_count() == 1);
    CHECK_FALSE(g.is_downward_closed());
    g.enforce_downward_closure();
    CHECK(g.is_downward_closed());
    CHECK(g.marked_count() == 6);
    // 6 cells of 0.25 area in the octant, times 4 for the signs
    CHECK(g.volume() == doctest::Approx(6.0));
    CHECK(g.contains(Point{-1.2, 0.9}));
    CHECK_FALSE(g.contains(Point{1.6, 0.1}));
    const auto ext = g.extent();
    CHECK(ext[0] == doctest::Approx(1.5));
    CHECK(ext[1] == doctest::Approx(1.0));
    CHECK(g.maximal_cells().size() == 1);
    const GridSet c = g.coarsened();
    CHECK(c.resolution() == 2);
    CHECK(c.cell_size(0) == doctest::Approx(1.0));
}

TEST_CASE("dilates") {
    const Body sq = Body::box({1.0, 1.0});
    const Body big = dilate(sq, 2.5);
    CHECK(big.contains(Point{2.4, -2.4}));
    CHECK_FALSE(big.contains(Point{2.6, 0.0}));
    CHECK(big.support(Point{1.0, 1.0}) == doctest::Approx(5.0));
    const Body point = dilate(sq, 0.0);
    CHECK(point.degenerate());
    CHECK(point.contains(Point{0.0, 0.0}));
    CHECK_FALSE(point.contains(Point{1e-9, 0.0}));
}

TEST_CASE("sampling") {
    const Body e = Body::lq_ball(ExtReal(2.0), {1.0, 0.5});
    const auto in = sample_points(e, 500, SampleMode::Interior, 9);
    CHECK(in.points.size() == 500);
    for (const auto& x : in.points) CHECK(e.contains(x));
    // acceptance rate against the enclosing disc: area ratio 0.5 pi / pi
    const double rate = 500.0 / static_cast<double>(in.attempts);
    CHECK(rate == doctest::Approx(0.5).epsilon(0.15));
    const auto bd = sample_points(e, 200, SampleMode::Boundary, 9);
    for (const auto& x : bd.points) {
        CHECK(e.contains(x));
        Point y = x;
        for (auto& c : y) c *= 1 + 1e-6;
        CHECK_FALSE(e.contains(y));
    }
    const auto again = sample_points(e, 500, SampleMode::Interior, 9);
    CHECK(again.points == in.points);
}

TEST_CASE("hausdorff distance of nested cubes") {
    const Body a = Body::box({2.0, 2.0});
    const Body b = Body::box({2.2, 2.2});
    const auto dirs = circle_directions(720);
    // support difference 0.2 (|u1| + |u2|) peaks at the diagonal
    CHECK(hausdorff_distance(a, b, dirs) == doctest::Approx(0.2 * std::sqrt(2.0)).epsilon(1e-12));
}
