// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "lpbm/certify.hpp"
#include "lpbm/errors.hpp"
#include "lpbm/measures.hpp"

using namespace lpbm;

namespace {

Potential value_only(int n) {
    Potential v;
    v.value = [](std::span<const double> x) {
        double s = 0.0;
        for (double c : x) s += c * c;
        return 0.5 * s;
    };
    (void)n;
    return v;
}

}  // namespace

TEST_CASE("Jacobi eigenvalues") {
    SymMatrix m(3);
    m(0, 0) = 2;
    m(1, 1) = 3;
    m(2, 2) = 4;
    m(0, 1) = m(1, 0) = 1;
    const auto ev = symmetric_eigenvalues(m);
    // characteristic polynomial (2-l)(3-l)(4-l) - (4-l) = (4-l)(l^2 - 5l + 5)
    std::vector<double> exact{(5 - std::sqrt(5.0)) / 2, (5 + std::sqrt(5.0)) / 2, 4.0};
    std::sort(exact.begin(), exact.end());
    for (int i = 0; i < 3; ++i) CHECK(ev[static_cast<std::size_t>(i)] == doctest::Approx(exact[static_cast<std::size_t>(i)]).epsilon(1e-12));
}

TEST_CASE("criterion matrix of the Gaussian potential") {
    const Potential& v = *Density::gaussian(2).potential();
    Rng rng(4);
    for (double gamma : {0.5, 1.0, 2.0}) {
        for (int k = 0; k < 50; ++k) {
            const Point x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
            const auto ev = symmetric_eigenvalues(criterion_matrix(v, gamma, x));
            const double r2 = x[0] * x[0] + x[1] * x[1];
            const double a = -1.0, b = gamma * r2 - 1.0;
            CHECK(ev[0] == doctest::Approx(std::min(a, b)).epsilon(1e-9));
            CHECK(ev[1] == doctest::Approx(std::max(a, b)).epsilon(1e-9));
        }
    }
}

TEST_CASE("finite differences stand in for missing derivatives") {
    const Potential v = value_only(2);
    const Point x{0.7, -0.3};
    const auto ev = symmetric_eigenvalues(criterion_matrix(v, 1.0, x));
    CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(ev[1] == doctest::Approx(0.58 - 1.0).epsilon(1e-6));
}

TEST_CASE("certificates on balls") {
    const Potential& v = *Density::gaussian(2).potential();
    const auto inside = certify_region(v, 1.0, Region::ball(2, 0.9));
    CHECK(inside.verdict == CertVerdict::Certified);
    CHECK_FALSE(inside.boundary_contact);
    const auto edge = certify_region(v, 1.0, Region::ball(2, 1.0));
    CHECK(edge.verdict == CertVerdict::Certified);
    CHECK(edge.boundary_contact);
    const auto outside = certify_region(v, 1.0, Region::ball(2, 2.0));
    CHECK(outside.verdict == CertVerdict::Violated);
    CHECK(outside.max_eigenvalue == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(std::hypot(outside.witness[0], outside.witness[1]) > 1.0);
    const auto box = certify_region(v, 0.25, Region::box({1.0, 1.0}));
    CHECK(box.verdict == CertVerdict::Certified);
}

TEST_CASE("Gaussian improved exponent") {
    CHECK(gaussian_improved_exponent(1.0, 2) == doctest::Approx(1.0 / 3.0));
    CHECK(gaussian_improved_exponent(2.0, 3) == doctest::Approx(2.0 / 7.0));
    CHECK_THROWS_AS(gaussian_improved_exponent(0.0, 2), DomainError);
}
