// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "lpbm/errors.hpp"
#include "lpbm/means.hpp"
#include "lpbm/numeric.hpp"

using namespace lpbm;

namespace {

// Direct textbook formulas, written independently of the library.
double arithmetic(double l, double a, double b) { return (1 - l) * a + l * b; }
double geometric(double l, double a, double b) { return std::exp((1 - l) * std::log(a) + l * std::log(b)); }
double harmonic(double l, double a, double b) { return 1.0 / ((1 - l) / a + l / b); }
double power(double p, double l, double a, double b) {
    return std::pow((1 - l) * std::pow(a, p) + l * std::pow(b, p), 1.0 / p);
}

}  // namespace

TEST_CASE("ExtReal parsing and ordering") {
    CHECK(ExtReal::parse("inf").is_pos_inf());
    CHECK(ExtReal::parse("-inf").is_neg_inf());
    CHECK(ExtReal::parse("0.25").value() == 0.25);
    CHECK_THROWS_AS(ExtReal::parse("abc"), DomainError);
    CHECK_THROWS_AS(ExtReal(std::numeric_limits<double>::infinity()), DomainError);
    CHECK(ExtReal::neg_inf() < ExtReal(-1e300));
    CHECK(ExtReal(1e300) < ExtReal::pos_inf());
    CHECK(ExtReal(0.0).recip().is_pos_inf());
    CHECK(ExtReal::pos_inf().recip().is_zero());
    CHECK(ExtReal(4.0).recip().value() == 0.25);
    CHECK(ExtReal(-0.0).to_string() == "0");
}

TEST_CASE("power means match closed forms") {
    const double a = 2.0, b = 8.0, l = 0.25;
    const Weight w(l);
    CHECK(p_mean(ExtReal(1.0), w, a, b) == doctest::Approx(arithmetic(l, a, b)).epsilon(1e-14));
    CHECK(p_mean(ExtReal(0.0), w, a, b) == doctest::Approx(geometric(l, a, b)).epsilon(1e-14));
    CHECK(p_mean(ExtReal(-1.0), w, a, b) == doctest::Approx(harmonic(l, a, b)).epsilon(1e-14));
    CHECK(p_mean(ExtReal(0.5), w, a, b) == doctest::Approx(power(0.5, l, a, b)).epsilon(1e-14));
    CHECK(p_mean(ExtReal(3.0), w, a, b) == doctest::Approx(power(3.0, l, a, b)).epsilon(1e-14));
    CHECK(p_mean(ExtReal::pos_inf(), w, a, b) == 8.0);
    CHECK(p_mean(ExtReal::neg_inf(), w, a, b) == 2.0);
}

TEST_CASE("power mean zero-argument convention") {
    const Weight w(0.5);
    CHECK(p_mean(ExtReal(1.0), w, 0.0, 4.0) == doctest::Approx(2.0));
    CHECK(p_mean(ExtReal(0.5), w, 0.0, 4.0) == doctest::Approx(1.0));
    CHECK(p_mean(ExtReal(0.0), w, 0.0, 4.0) == 0.0);
    CHECK(p_mean(ExtReal(-2.0), w, 0.0, 4.0) == 0.0);
    CHECK_THROWS_AS(p_mean(ExtReal(1.0), w, -1.0, 4.0), DomainError);
    CHECK_THROWS_AS(Weight(1.5), DomainError);
}

TEST_CASE("power mean properties on random tuples") {
    Rng rng(11);
    const std::vector<double> orders{-50, -3, -1, -0.5, 0, 0.3, 0.5, 1, 2, 7};
    for (int k = 0; k < 2000; ++k) {
        const double a = rng.uniform(0.1, 10.0), b = rng.uniform(0.1, 10.0);
        const Weight w(rng.uniform());
        double prev = p_mean(ExtReal::neg_inf(), w, a, b);
        for (double p : orders) {
            const double m = p_mean(ExtReal(p), w, a, b);
            CHECK(m >= prev * (1 - 1e-13));
            prev = m;
        }
        CHECK(p_mean(ExtReal::pos_inf(), w, a, b) >= prev * (1 - 1e-13));
        const double t = rng.uniform(0.1, 5.0);
        const ExtReal p(rng.uniform(-3.0, 3.0));
        CHECK(p_mean(p, w, t * a, t * b) == doctest::Approx(t * p_mean(p, w, a, b)).epsilon(1e-12));
        CHECK(p_mean(p, Weight(0.0), a, b) == a);
        CHECK(p_mean(p, Weight(1.0), a, b) == b);
    }
}

TEST_CASE("power mean is continuous at p = 0") {
    Rng rng(5);
    for (int k = 0; k < 500; ++k) {
        const double a = rng.uniform(0.1, 10.0), b = rng.uniform(0.1, 10.0);
        const Weight w(rng.uniform());
        const double g = geometric(w.value(), a, b);
        CHECK(std::abs(p_mean(ExtReal(1e-6), w, a, b) - g) < 1e-4);
        CHECK(std::abs(p_mean(ExtReal(-1e-6), w, a, b) - g) < 1e-4);
        CHECK(std::abs(p_mean(ExtReal(1e-10), w, a, b) - g) < 1e-8);
    }
}

TEST_CASE("m-term mean") {
    const std::vector<double> w{0.2, 0.3, 0.5};
    const std::vector<double> v{1.0, 4.0, 9.0};
    CHECK(p_mean_m(ExtReal(1.0), w, v) == doctest::Approx(0.2 + 1.2 + 4.5));
    const double g = std::exp(0.2 * std::log(1.0) + 0.3 * std::log(4.0) + 0.5 * std::log(9.0));
    CHECK(p_mean_m(ExtReal(0.0), w, v) == doctest::Approx(g));
    const std::vector<double> endpoint{0.0, 1.0, 0.0};
    CHECK(p_mean_m(ExtReal(-2.0), endpoint, v) == 4.0);
}

TEST_CASE("MeanKernel reproduces p_mean") {
    Rng rng(3);
    for (double p : {-2.0, -1.0, 0.0, 0.5, 1.0, 2.5}) {
        for (double l : {0.0, 0.3, 1.0}) {
            const MeanKernel k{ExtReal(p), Weight(l)};
            for (int i = 0; i < 50; ++i) {
                const double a = rng.uniform(0.1, 10.0), b = rng.uniform(0.1, 10.0);
                CHECK(k(a, b) == doctest::Approx(p_mean(ExtReal(p), Weight(l), a, b)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("gamma composition") {
    const PVector p11{ExtReal(1.0), ExtReal(1.0)};
    CHECK(gamma_compose(p11, ExtReal::pos_inf()).value() == doctest::Approx(0.5));
    CHECK(gamma_compose(p11, ExtReal(-0.5)).is_neg_inf());
    CHECK(gamma_compose(PVector{ExtReal(0.0), ExtReal(1.0)}, ExtReal(3.0)).is_zero());
    CHECK(gamma_compose(p11, ExtReal(0.0)).is_zero());
    // (n/p + 1/alpha)^-1 for equal exponents
    const double p = 0.5, alpha = -0.2;
    CHECK(gamma_compose(uniform_p(2, ExtReal(p)), ExtReal(alpha)).value() ==
          doctest::Approx(1.0 / (2 / p + 1 / alpha)));
    CHECK_THROWS_AS(gamma_compose(p11, ExtReal(-0.6)), DomainError);
    CHECK_THROWS_AS(gamma_compose(uniform_p(2, ExtReal(0.0)), ExtReal(-0.1)), DomainError);
    // monotone in alpha
    ExtReal prev = ExtReal::neg_inf();
    for (double a : {-0.5, -0.4, -0.1, 0.0, 0.2, 1.0}) {
        const ExtReal g = gamma_compose(p11, ExtReal(a));
        CHECK(prev <= g);
        prev = g;
    }
    CHECK(prev <= gamma_compose(p11, ExtReal::pos_inf()));
}

TEST_CASE("Borell correspondence") {
    for (int n : {1, 2, 3}) {
        for (double s : {-2.0, -0.3, 0.0, 0.1}) {
            if (s > 1.0 / n) continue;
            const ExtReal a = s_to_alpha(ExtReal(s), n);
            CHECK(a.value() == doctest::Approx(s / (1 - s * n)));
            CHECK(alpha_to_s(a, n).value() == doctest::Approx(s));
        }
        CHECK(s_to_alpha(ExtReal(1.0 / n), n).is_pos_inf());
        CHECK(s_to_alpha(ExtReal::neg_inf(), n).value() == doctest::Approx(-1.0 / n));
    }
    CHECK_THROWS_AS(s_to_alpha(ExtReal(0.6), 2), DomainError);
}

TEST_CASE("exponent comparison") {
    // alpha = -p/(n(1+p)) is the boundary of the sufficient condition
    const double p = 0.5;
    const int n = 2;
    const auto at_boundary = exponent_compare(p, ExtReal(-p / (n * (1 + p))), n);
    CHECK(at_boundary.holds);
    const auto zero = exponent_compare(p, ExtReal(0.0), n);
    CHECK(zero.holds);
    CHECK(zero.dilation_exponent.value() == doctest::Approx((1 - p) / n));
    const auto c = exponent_compare(1.0, ExtReal(-0.4), 2);
    const double gamma = 1.0 / (2.0 + 1.0 / -0.4);
    CHECK(c.gamma.value() == doctest::Approx(gamma));
    CHECK(c.s_exponent.value() == doctest::Approx(-0.4 / (1 - 0.8)));
    CHECK(c.holds == (gamma >= -0.4 / 0.2));
}
