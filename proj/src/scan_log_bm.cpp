// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "detail/verify_util.hpp"
#include "lpbm/errors.hpp"

namespace lpbm {

using detail::json;

namespace {

using Polygon = std::vector<std::array<double, 2>>;

/// Intersection of the halfplanes <x, u_k> <= g_k, by successive clipping of
/// a large square.
Polygon wulff_polygon(const std::vector<Point>& dirs, const std::vector<double>& g) {
    double big = 0.0;
    for (double v : g) big = std::max(big, std::abs(v));
    big = 4.0 * big + 1.0;
    Polygon poly{{-big, -big}, {big, -big}, {big, big}, {-big, big}};
    Polygon next;
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        const double ux = dirs[k][0], uy = dirs[k][1], c = g[k];
        next.clear();
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const auto& a = poly[i];
            const auto& b = poly[(i + 1) % poly.size()];
            const double da = ux * a[0] + uy * a[1] - c;
            const double db = ux * b[0] + uy * b[1] - c;
            if (da <= 0.0) next.push_back(a);
            if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
                const double s = da / (da - db);
                next.push_back({a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])});
            }
        }
        poly.swap(next);
        if (poly.empty()) break;
    }
    return poly;
}

double polygon_area(const Polygon& poly) {
    double s = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& a = poly[i];
        const auto& b = poly[(i + 1) % poly.size()];
        s += a[0] * b[1] - a[1] * b[0];
    }
    return 0.5 * std::abs(s);
}

/// Support values of a symmetric planar body on the direction set, or
/// nothing when they are not those of a convex body.
struct Shape {
    std::vector<double> h;
    double area = 0.0;
};

std::optional<Shape> realize(const std::vector<Point>& dirs, std::vector<double> h) {
    for (double v : h)
        if (!(v > 0.0)) return std::nullopt;
    const Polygon poly = wulff_polygon(dirs, h);
    if (poly.size() < 3) return std::nullopt;
    double scale = 0.0;
    for (double v : h) scale = std::max(scale, v);
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        double hw = -std::numeric_limits<double>::infinity();
        for (const auto& vtx : poly) hw = std::max(hw, dirs[k][0] * vtx[0] + dirs[k][1] * vtx[1]);
        if (std::abs(hw - h[k]) > 1e-9 * scale) return std::nullopt;
    }
    return Shape{std::move(h), polygon_area(poly)};
}

std::vector<double> harmonic_support(const std::vector<Point>& dirs, const std::vector<double>& coef, int harmonics) {
    std::vector<double> h(dirs.size());
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        const double t = std::atan2(dirs[k][1], dirs[k][0]);
        double v = coef[0];
        for (int j = 1; j <= harmonics; ++j) {
            v += coef[static_cast<std::size_t>(2 * j - 1)] * std::cos(2.0 * j * t);
            v += coef[static_cast<std::size_t>(2 * j)] * std::sin(2.0 * j * t);
        }
        h[k] = v;
    }
    return h;
}

std::vector<double> square_support(const std::vector<Point>& dirs, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    std::vector<double> h(dirs.size());
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        const double u = c * dirs[k][0] + s * dirs[k][1];
        const double w = -s * dirs[k][0] + c * dirs[k][1];
        h[k] = std::abs(u) + std::abs(w);
    }
    return h;
}

struct Evaluation {
    double relative = std::numeric_limits<double>::infinity();
    double lambda = 0.5;
    double lhs = 0.0;
    double rhs = 0.0;
};

Evaluation log_bm_margin(const std::vector<Point>& dirs, const Shape& a, const Shape& b,
                         const std::vector<double>& lambdas) {
    Evaluation best;
    std::vector<double> g(dirs.size());
    for (double l : lambdas) {
        for (std::size_t k = 0; k < dirs.size(); ++k) g[k] = std::pow(a.h[k], 1.0 - l) * std::pow(b.h[k], l);
        const double lhs = polygon_area(wulff_polygon(dirs, g));
        const double rhs = std::pow(a.area, 1.0 - l) * std::pow(b.area, l);
        const double rel = (lhs - rhs) / rhs;
        if (rel < best.relative) best = {rel, l, lhs, rhs};
    }
    return best;
}

}  // namespace

LogBmScanResult scan_log_bm(const LogBmScanConfig& scan, const VerifyConfig& cfg) {
    if (scan.harmonics < 0 || scan.directions < 8 || scan.budget < 1 || scan.restarts < 1)
        throw DomainError("scan_log_bm: invalid scan configuration");
    if (scan.lambdas.empty()) throw DomainError("scan_log_bm: lambda grid must be non-empty");
    for (double l : scan.lambdas) (void)Weight(l);

    LogBmScanResult out;
    Report& r = out.report;
    r.check = "scan_log_bm";
    r.gating = false;
    r.inputs = json{{"check", r.check},
                    {"harmonics", scan.harmonics},
                    {"directions", scan.directions},
                    {"restarts", scan.restarts},
                    {"budget", scan.budget},
                    {"coefficient_scale", scan.coefficient_scale},
                    {"unconditional_only", scan.unconditional_only},
                    {"lambdas", scan.lambdas},
                    {"rotation_steps", scan.rotation_steps},
                    {"seed", cfg.seed}}
                   .dump();

    const auto dirs = circle_directions(scan.directions);
    const double tol = 1e-6;

    // Square against rotated square.
    const auto square = realize(dirs, square_support(dirs, 0.0));
    double worst_rot = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= scan.rotation_steps && square; ++k) {
        const double angle = 0.25 * std::numbers::pi * k / std::max(scan.rotation_steps, 1);
        const auto rotated = realize(dirs, square_support(dirs, angle));
        if (!rotated) continue;
        const auto e = log_bm_margin(dirs, *rotated, *square, scan.lambdas);
        ++out.evaluated;
        worst_rot = std::min(worst_rot, e.relative);
        r.points.push_back(make_point("rotated_square angle=" + format_double(angle) + " " +
                                          detail::label("lambda", e.lambda),
                                      e.lhs, tol * e.rhs, e.rhs, 0.0, 1.0));
    }

    // Random restarts with coordinate descent on harmonic coefficients.
    const std::size_t ncoef = static_cast<std::size_t>(2 * scan.harmonics + 1);
    Rng rng(cfg.seed);
    // Harmonic k enters h + h'' with weight 1 - 4k^2, so coefficients are
    // scaled by 1/(4k^2 - 1) to keep most candidates convex.
    auto coef_scale = [&](std::size_t j) {
        const double k = static_cast<double>((j + 1) / 2);
        return scan.coefficient_scale / (4.0 * k * k - 1.0);
    };
    auto random_coef = [&] {
        std::vector<double> c(ncoef, 0.0);
        c[0] = 1.0;
        for (std::size_t j = 1; j < ncoef; ++j) {
            const bool sine = j % 2 == 0;
            c[j] = (scan.unconditional_only && sine) ? 0.0 : rng.uniform(-1.0, 1.0) * coef_scale(j);
        }
        return c;
    };

    Evaluation best_overall;
    int evaluations_left = scan.budget;
    auto evaluate = [&](const std::vector<double>& ca, const std::vector<double>& cb) -> std::optional<Evaluation> {
        if (evaluations_left <= 0) return std::nullopt;
        --evaluations_left;
        const auto a = realize(dirs, harmonic_support(dirs, ca, scan.harmonics));
        const auto b = realize(dirs, harmonic_support(dirs, cb, scan.harmonics));
        if (!a || !b) {
            ++out.rejected;
            return std::nullopt;
        }
        ++out.evaluated;
        return log_bm_margin(dirs, *a, *b, scan.lambdas);
    };

    for (int restart = 0; restart < scan.restarts && evaluations_left > 0; ++restart) {
        auto ca = random_coef();
        auto cb = random_coef();
        auto current = evaluate(ca, cb);
        if (!current) continue;
        double step = 0.5;
        while (step > 1e-3 && evaluations_left > 0) {
            bool improved = false;
            for (std::size_t j = 1; j < 2 * ncoef && evaluations_left > 0; ++j) {
                if (j == ncoef) continue;  // keep both constant terms fixed (scale)
                auto& vec = j < ncoef ? ca : cb;
                const std::size_t idx = j < ncoef ? j : j - ncoef;
                if (scan.unconditional_only && idx % 2 == 0) continue;
                for (double dir : {1.0, -1.0}) {
                    vec[idx] += dir * step * coef_scale(idx);
                    const auto e = evaluate(ca, cb);
                    if (e && e->relative < current->relative) {
                        current = e;
                        improved = true;
                        break;
                    }
                    vec[idx] -= dir * step * coef_scale(idx);
                }
            }
            if (!improved) step *= 0.5;
        }
        if (current->relative < best_overall.relative) {
            best_overall = *current;
            out.best_a = ca;
            out.best_b = cb;
        }
        r.points.push_back(make_point("restart=" + std::to_string(restart) + " " + detail::label("lambda", current->lambda),
                                      current->lhs, tol * current->rhs, current->rhs, 0.0, 1.0));
    }

    out.min_relative_margin = std::min(best_overall.relative, worst_rot);
    out.best_lambda = best_overall.lambda;
    r.notes.push_back("exploratory: minimal relative margin " + format_double(out.min_relative_margin) + " over " +
                      std::to_string(out.evaluated) + " evaluations, " + std::to_string(out.rejected) +
                      " non-convex candidates rejected");
    if (std::isfinite(worst_rot)) r.notes.push_back("rotated square vs square: minimal relative margin " + format_double(worst_rot));
    finalize(r);
    return out;
}

}  // namespace lpbm
