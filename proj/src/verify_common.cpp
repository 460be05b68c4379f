// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "detail/verify_util.hpp"
#include "lpbm/errors.hpp"

namespace lpbm {

namespace detail {

std::pair<double, double> mean_with_error(ExtReal gamma, Weight lambda, double a, double ea, double b, double eb) {
    const double r = p_mean(gamma, lambda, a, b);
    const double up = p_mean(gamma, lambda, a + ea, b + eb);
    const double dn = p_mean(gamma, lambda, std::max(a - ea, 0.0), std::max(b - eb, 0.0));
    double err = std::max(up - r, r - dn);
    if (!std::isfinite(err)) err = 0.0;
    return {r, std::max(err, 0.0)};
}

std::string label(const char* name, double v) { return std::string(name) + "=" + format_double(v); }

std::string triple_label(const Triple& t) {
    return "t=(" + format_double(t.t1) + "," + format_double(t.mid) + "," + format_double(t.t2) + ")";
}

json verify_config_json(const VerifyConfig& cfg, int dim) {
    return {{"resolution", grid_resolution(cfg, dim)},
            {"measure_resolution", measure_config(cfg, dim).resolution},
            {"firey_directions", firey_directions(cfg, dim)},
            {"tolerance_factor", cfg.tolerance_factor},
            {"mc_samples", cfg.measure.mc_samples},
            {"measure_seed", cfg.measure.seed},
            {"seed", cfg.seed}};
}

}  // namespace detail

std::vector<double> default_lambda_grid(bool include_endpoints) {
    std::vector<double> out;
    if (include_endpoints) out.push_back(0.0);
    for (int k = 1; k <= 9; ++k) out.push_back(k / 10.0);
    if (include_endpoints) out.push_back(1.0);
    return out;
}

std::vector<Triple> make_triples(double lo, double hi, int count, std::uint64_t seed) {
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("make_triples: invalid range");
    if (count < 1) throw DomainError("make_triples: count must be positive");
    std::vector<Triple> out;
    out.reserve(static_cast<std::size_t>(count));
    const int lattice = count / 2;
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
    auto push = [&](double u, double v) {
        double t1 = lo + (hi - lo) * u;
        double t2 = lo + (hi - lo) * v;
        if (t1 > t2) std::swap(t1, t2);
        out.push_back({t1, 0.5 * (t1 + t2), t2});
    };
    for (int k = 0; k < lattice; ++k) push((k + 0.5) / lattice, std::fmod((k + 0.5) * golden, 1.0));
    Rng rng(seed);
    for (int k = lattice; k < count; ++k) {
        const double u = rng.uniform();
        push(u, rng.uniform());
    }
    return out;
}

namespace {

constexpr CheckInfo kCatalog[] = {
    {"check_bmi", "Theorem (+_p Brunn-Minkowski)",
     "mu((1-l) A +_p l B) >= M_gamma^l(mu(A), mu(B)), gamma = (sum_i 1/p_i + 1/alpha)^-1", false},
    {"check_bmi_mset", "Theorem (+_p Brunn-Minkowski), m-set form",
     "mu(l_1 A_1 +_p ... +_p l_m A_m) >= M_gamma^l(mu(A_1), ..., mu(A_m))", false},
    {"check_inclusion", "Lemma (inclusion)", "(1-l) A oplus_p l B contains (1-l) A +_(p,...,p) l B", false},
    {"check_plus1_is_minkowski", "Proposition (p = 1 recovers Minkowski)", "(1-l) A +_(1,...,1) l B = (1-l) A + l B",
     false},
    {"check_firey_corollary", "Corollary (L_p)",
     "mu((1-l) A oplus_p l B) >= M_gamma^l(mu(A), mu(B)), gamma = (n/p + 1/alpha)^-1", false},
    {"check_power_dilation_concavity", "Proposition ((B) variant)",
     "t -> mu(t^(1/p) A) is gamma-concave for alpha in [-p/n, 0)", false},
    {"check_dilation_concavity", "Corollary (concavity of t -> mu(tA))",
     "t -> mu(t A) is ((1-p)/n + gamma)-concave", false},
    {"check_gaussian_improvement", "Gaussian improvement",
     "gamma_n((1-l) A + l B) >= M_{gamma/(1+gamma n)}^l(gamma_n(A), gamma_n(B)) for A, B in (1/sqrt(gamma)) B_2^n",
     false},
    {"check_B_property", "Conjecture (B), unconditional case", "t -> mu(e^t A) is log-concave", false},
    {"check_functional_B", "Proposition (equivalence), functional (B)",
     "t -> int f(e^-t x) g(x) dx is log-concave", false},
    {"uhrin_functional_check", "Theorem (+_p Brunn-Minkowski), functional step",
     "h((1-l) x +_p l y) >= M_alpha^l(f(x), g(y)) implies int h >= M_gamma^l(int f, int g)", false},
    {"lift_to_uniform", "Proposition (reduction), Step 2",
     "K_p = {(x, y) : V(x) <= p, |y| <= 1 - V(x)/p} and (1 - V/p)_+^p -> e^-V", false},
    {"scan_log_bm", "Conjecture (log-Brunn-Minkowski)",
     "|(1-l) A oplus_0 l B| >= |A|^(1-l) |B|^l for symmetric planar A, B", true},
};

}  // namespace

std::span<const CheckInfo> check_catalog() { return kCatalog; }

}  // namespace lpbm
