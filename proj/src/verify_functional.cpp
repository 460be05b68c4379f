// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail/verify_util.hpp"
#include "lpbm/errors.hpp"

namespace lpbm {

using detail::json;

namespace {

int default_uhrin_resolution(int dim) {
    switch (dim) {
        case 1: return 512;
        case 2: return 64;
        default: return 16;
    }
}

struct InputGrid {
    std::vector<double> h;
    std::vector<std::vector<int>> coords;  ///< per kept cell, index along each axis
    std::vector<double> values;            ///< density at the kept cell centers
    double integral = 0.0;
};

InputGrid sample_input(const Density& d, const std::vector<double>& ext, int n_in) {
    const int dim = d.dim();
    InputGrid g;
    g.h.resize(ext.size());
    double cell = 1.0;
    for (std::size_t i = 0; i < ext.size(); ++i) {
        g.h[i] = ext[i] / n_in;
        cell *= g.h[i];
    }
    std::size_t cells = 1;
    for (int i = 0; i < dim; ++i) cells *= static_cast<std::size_t>(n_in);
    Point x(static_cast<std::size_t>(dim));
    std::vector<int> idx(static_cast<std::size_t>(dim));
    std::vector<double> all;
    all.reserve(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        std::size_t rem = c;
        for (int i = 0; i < dim; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            idx[ui] = static_cast<int>(rem % static_cast<std::size_t>(n_in));
            rem /= static_cast<std::size_t>(n_in);
            x[ui] = (idx[ui] + 0.5) * g.h[ui];
        }
        const double v = d(x);
        all.push_back(v);
        if (v > 0.0) {
            g.coords.push_back(idx);
            g.values.push_back(v);
        }
    }
    g.integral = std::ldexp(pairwise_sum(all) * cell, dim);
    return g;
}

struct UhrinRun {
    double integral_h = 0.0;
    double integral_f = 0.0;
    double integral_g = 0.0;
    std::size_t support_cells = 0;
};

UhrinRun run_uhrin(const Density& f, const Density& g, const std::vector<double>& f_ext,
                   const std::vector<double>& g_ext, ExtReal alpha, const PVector& p, Weight lambda, int n_out) {
    const int dim = f.dim();
    const int n_in = 2 * n_out;
    const InputGrid gf = sample_input(f, f_ext, n_in);
    const InputGrid gg = sample_input(g, g_ext, n_in);
    UhrinRun run;
    run.integral_f = gf.integral;
    run.integral_g = gg.integral;
    if (gf.values.empty() || gg.values.empty()) return run;

    std::vector<double> h_out(static_cast<std::size_t>(dim));
    double cell_out = 1.0;
    for (int i = 0; i < dim; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        h_out[ui] = p_mean(p[ui], lambda, f_ext[ui], g_ext[ui]) / n_out;
        cell_out *= h_out[ui];
    }

    // Output cell index of M_{p_i}(x_a, y_b) along each axis, for every pair of
    // input indices; the strides fold in the flat layout.
    std::vector<std::vector<std::size_t>> table(static_cast<std::size_t>(dim));
    std::size_t stride = 1;
    for (int i = 0; i < dim; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        auto& t = table[ui];
        t.resize(static_cast<std::size_t>(n_in) * static_cast<std::size_t>(n_in));
        for (int a = 0; a < n_in; ++a) {
            for (int b = 0; b < n_in; ++b) {
                const double z = p_mean(p[ui], lambda, (a + 0.5) * gf.h[ui], (b + 0.5) * gg.h[ui]);
                const int k = std::min(static_cast<int>(z / h_out[ui]), n_out - 1);
                t[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_in) + static_cast<std::size_t>(b)] =
                    static_cast<std::size_t>(k) * stride;
            }
        }
        stride *= static_cast<std::size_t>(n_out);
    }

    const MeanKernel value_kernel(alpha, lambda);
    const bool larger = value_kernel.increasing();
    std::vector<double> fwd_g(gg.values.size());
    for (std::size_t k = 0; k < gg.values.size(); ++k) fwd_g[k] = value_kernel.forward(gg.values[k]);
    const double worst = larger ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
    std::vector<double> best(stride, worst);
    std::vector<std::uint8_t> hit(stride, 0);

    const std::size_t ng = gg.values.size();
    std::vector<const std::size_t*> rows(static_cast<std::size_t>(dim));
    std::vector<std::vector<int>> g_axis(static_cast<std::size_t>(dim), std::vector<int>(ng));
    for (std::size_t k = 0; k < ng; ++k)
        for (int i = 0; i < dim; ++i) g_axis[static_cast<std::size_t>(i)][k] = gg.coords[k][static_cast<std::size_t>(i)];

    for (std::size_t ka = 0; ka < gf.values.size(); ++ka) {
        const double fa = value_kernel.forward(gf.values[ka]);
        for (int i = 0; i < dim; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            rows[ui] = table[ui].data() + static_cast<std::size_t>(gf.coords[ka][ui]) * static_cast<std::size_t>(n_in);
        }
        for (std::size_t kb = 0; kb < ng; ++kb) {
            std::size_t cell = 0;
            for (int i = 0; i < dim; ++i) cell += rows[static_cast<std::size_t>(i)][g_axis[static_cast<std::size_t>(i)][kb]];
            const double s = value_kernel.combine(fa, fwd_g[kb]);
            hit[cell] = 1;
            if (larger ? s > best[cell] : s < best[cell]) best[cell] = s;
        }
    }

    std::vector<double> hv;
    for (std::size_t c = 0; c < stride; ++c) {
        if (!hit[c]) continue;
        ++run.support_cells;
        hv.push_back(value_kernel.inverse(best[c]));
    }
    run.integral_h = std::ldexp(pairwise_sum(hv) * cell_out, dim);
    return run;
}

std::vector<double> finite_extent(const Density& d, const char* who) {
    const auto e = d.truncation_extent(1e-12);
    if (!e) throw DomainError(std::string("uhrin_functional_check: ") + who + " must have bounded (or decaying) support");
    return *e;
}

}  // namespace

Report uhrin_functional_check(const Density& f, const Density& g, ExtReal alpha, const PVector& p, Weight lambda,
                              int resolution, const VerifyConfig& cfg) {
    const int n = f.dim();
    if (g.dim() != n || p.size() != static_cast<std::size_t>(n))
        throw DomainError("uhrin_functional_check: dimension mismatch");
    if (n > 3) throw Unsupported("uhrin_functional_check: dimension must be <= 3");
    const ExtReal gamma = gamma_compose(p, alpha);
    const int n_out = resolution > 0 ? resolution : default_uhrin_resolution(n);
    if (n_out < 4) throw DomainError("uhrin_functional_check: resolution must be >= 4");
    const auto f_ext = finite_extent(f, "f");
    const auto g_ext = finite_extent(g, "g");

    Report r;
    r.check = "uhrin_functional_check";
    r.inputs = json{{"check", r.check},
                    {"f", json::parse(f.describe())},
                    {"g", json::parse(g.describe())},
                    {"alpha", detail::ext_json(alpha)},
                    {"p", detail::pvec_json(p)},
                    {"lambda", lambda.value()},
                    {"resolution", n_out},
                    {"config", detail::verify_config_json(cfg, n)}}
                   .dump();
    r.notes.push_back("gamma = " + gamma.to_string());

    const auto fine = run_uhrin(f, g, f_ext, g_ext, alpha, p, lambda, n_out);
    if (fine.support_cells == 0) {
        r.notes.push_back("degenerate: f or g has empty effective support on the grid");
        r.points.push_back(make_point(detail::label("lambda", lambda.value()), 0.0, 0.0, 0.0, 0.0, cfg.tolerance_factor));
        finalize(r);
        return r;
    }
    const auto coarse = run_uhrin(f, g, f_ext, g_ext, alpha, p, lambda, n_out / 2);
    const double eh = std::abs(fine.integral_h - coarse.integral_h);
    const double ef = std::abs(fine.integral_f - coarse.integral_f);
    const double eg = std::abs(fine.integral_g - coarse.integral_g);
    const auto [rhs, rhs_err] = detail::mean_with_error(gamma, lambda, fine.integral_f, ef, fine.integral_g, eg);
    r.points.push_back(make_point(detail::label("lambda", lambda.value()), fine.integral_h, eh, rhs, rhs_err,
                                  cfg.tolerance_factor));
    r.notes.push_back("int f = " + format_double(fine.integral_f) + ", int g = " + format_double(fine.integral_g) +
                      ", h supported on " + std::to_string(fine.support_cells) + " cells");
    finalize(r);
    return r;
}

LiftResult lift_to_uniform(const Potential& v, std::span<const int> orders, std::span<const double> half_widths,
                           double final_bound, const VerifyConfig& cfg) {
    if (!v.value) throw DomainError("lift_to_uniform: potential value oracle required");
    if (orders.empty()) throw DomainError("lift_to_uniform: at least one order p required");
    for (int p : orders)
        if (p < 1) throw DomainError("lift_to_uniform: orders must be >= 1");
    const int n = static_cast<int>(half_widths.size());
    if (n < 1 || n > 3) throw DomainError("lift_to_uniform: box dimension must be 1..3");
    for (double w : half_widths)
        if (!(w > 0.0)) throw DomainError("lift_to_uniform: half widths must be positive");

    LiftResult out;
    Report& r = out.report;
    r.check = "lift_to_uniform";
    r.inputs = json{{"check", r.check},
                    {"orders", std::vector<int>(orders.begin(), orders.end())},
                    {"half_widths", std::vector<double>(half_widths.begin(), half_widths.end())},
                    {"final_bound", final_bound},
                    {"seed", cfg.seed}}
                   .dump();

    Rng rng(cfg.seed);
    auto random_point = [&](Point& x) {
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = rng.uniform(-1.0, 1.0) * half_widths[static_cast<std::size_t>(i)];
    };

    // Evenness and midpoint convexity of V on samples.
    {
        Point x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n)), m(static_cast<std::size_t>(n)),
            neg(static_cast<std::size_t>(n));
        for (int k = 0; k < 1000; ++k) {
            random_point(x);
            random_point(y);
            for (int i = 0; i < n; ++i) {
                const auto ui = static_cast<std::size_t>(i);
                m[ui] = 0.5 * (x[ui] + y[ui]);
                neg[ui] = -x[ui];
            }
            const double vx = v.value(x);
            const double vy = v.value(y);
            if (std::abs(v.value(neg) - vx) > 1e-9 * (1.0 + std::abs(vx)))
                throw DomainError("lift_to_uniform: V is not even on the box");
            if (v.value(m) > 0.5 * (vx + vy) + 1e-9 * (1.0 + std::abs(vx) + std::abs(vy)))
                throw DomainError("lift_to_uniform: V is not convex on the box");
        }
    }

    constexpr int kGrid = 201;
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= kGrid;
    std::vector<double> potential(total);
    {
        Point x(static_cast<std::size_t>(n));
        for (std::size_t c = 0; c < total; ++c) {
            std::size_t rem = c;
            for (int i = 0; i < n; ++i) {
                const auto ui = static_cast<std::size_t>(i);
                const auto k = rem % kGrid;
                rem /= kGrid;
                x[ui] = -half_widths[ui] + 2.0 * half_widths[ui] * static_cast<double>(k) / (kGrid - 1);
            }
            potential[c] = v.value(x);
        }
    }

    for (int p : orders) {
        double d = 0.0;
        for (double vx : potential) {
            const double base = std::max(0.0, 1.0 - vx / p);
            d = std::max(d, std::abs(std::pow(base, p) - std::exp(-vx)));
        }
        out.orders.push_back(p);
        out.distances.push_back(d);
        out.bodies.push_back(json{{"family", "lifted"}, {"p", p}, {"constraint", "V(x) <= p, |y| <= 1 - V(x)/p"},
                                  {"x_box", std::vector<double>(half_widths.begin(), half_widths.end())}}
                                 .dump());

        // Midpoint convexity of K_p in R^{n+p}.
        int violations = 0;
        Point x1(static_cast<std::size_t>(n)), x2(static_cast<std::size_t>(n)), xm(static_cast<std::size_t>(n));
        std::vector<double> y1(static_cast<std::size_t>(p)), y2(static_cast<std::size_t>(p));
        auto fill_y = [&](std::vector<double>& y, double radius) {
            double s = 0.0;
            for (auto& c : y) {
                c = rng.normal();
                s += c * c;
            }
            const double scale = s > 0.0 ? radius * rng.uniform() / std::sqrt(s) : 0.0;
            for (auto& c : y) c *= scale;
        };
        auto sample_domain = [&](Point& x) {
            for (int attempt = 0; attempt < 1000; ++attempt) {
                random_point(x);
                if (v.value(x) <= p) return true;
            }
            return false;
        };
        int tested = 0;
        for (int k = 0; k < 200; ++k) {
            if (!sample_domain(x1) || !sample_domain(x2)) break;
            ++tested;
            fill_y(y1, std::max(0.0, 1.0 - v.value(x1) / p));
            fill_y(y2, std::max(0.0, 1.0 - v.value(x2) / p));
            for (int i = 0; i < n; ++i) xm[static_cast<std::size_t>(i)] = 0.5 * (x1[static_cast<std::size_t>(i)] + x2[static_cast<std::size_t>(i)]);
            double ym = 0.0;
            for (std::size_t j = 0; j < y1.size(); ++j) ym += 0.25 * (y1[j] + y2[j]) * (y1[j] + y2[j]);
            if (std::sqrt(ym) > std::max(0.0, 1.0 - v.value(xm) / p) + 1e-12) ++violations;
        }
        r.points.push_back(make_point("K_p midpoint convexity p=" + std::to_string(p), violations, 0.0, 0.0, 0.0,
                                      cfg.tolerance_factor, PointKind::Identity));
        if (tested < 200)
            r.notes.push_back("K_p convexity at p=" + std::to_string(p) + " tested on " + std::to_string(tested) +
                              " pairs only (V <= p is rare on the box)");
    }

    for (std::size_t k = 1; k < out.distances.size(); ++k) {
        r.points.push_back(make_point("d(p=" + std::to_string(out.orders[k - 1]) + ")>d(p=" +
                                          std::to_string(out.orders[k]) + ")",
                                      out.distances[k - 1], 0.0, out.distances[k], 0.0, cfg.tolerance_factor));
    }
    r.points.push_back(make_point("d(p=" + std::to_string(out.orders.back()) + ")<" + format_double(final_bound),
                                  final_bound, 0.0, out.distances.back(), 0.0, cfg.tolerance_factor));
    std::string ds;
    for (std::size_t k = 0; k < out.distances.size(); ++k)
        ds += (k ? ", " : "") + std::string("p=") + std::to_string(out.orders[k]) + ": " + format_double(out.distances[k]);
    r.notes.push_back("sup distances " + ds);
    finalize(r);
    return out;
}

}  // namespace lpbm
