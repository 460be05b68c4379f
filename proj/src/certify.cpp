// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbm/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"
#include "lpbm/errors.hpp"

namespace lpbm {

namespace {

double fd_step(std::span<const double> x) { return 1e-4 * (1.0 + norm2(x)); }

Point fd_gradient(const Potential& v, std::span<const double> x) {
    const double h = fd_step(x);
    Point y(x.begin(), x.end());
    Point g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] = x[i] + h;
        const double fp = v.value(y);
        y[i] = x[i] - h;
        const double fm = v.value(y);
        y[i] = x[i];
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

SymMatrix fd_hessian(const Potential& v, std::span<const double> x) {
    const int n = static_cast<int>(x.size());
    const double h = fd_step(x);
    Point y(x.begin(), x.end());
    SymMatrix m(n);
    const double f0 = v.value(y);
    for (int i = 0; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        y[ui] = x[ui] + h;
        const double fp = v.value(y);
        y[ui] = x[ui] - h;
        const double fm = v.value(y);
        y[ui] = x[ui];
        m(i, i) = (fp - 2.0 * f0 + fm) / (h * h);
        for (int j = i + 1; j < n; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            double acc = 0.0;
            for (int si = -1; si <= 1; si += 2) {
                for (int sj = -1; sj <= 1; sj += 2) {
                    y[ui] = x[ui] + si * h;
                    y[uj] = x[uj] + sj * h;
                    acc += si * sj * v.value(y);
                }
            }
            y[ui] = x[ui];
            y[uj] = x[uj];
            m(i, j) = m(j, i) = acc / (4.0 * h * h);
        }
    }
    return m;
}

}  // namespace

SymMatrix criterion_matrix(const Potential& v, double gamma, std::span<const double> x) {
    if (!v.value && (!v.gradient || !v.hessian)) throw DomainError("criterion_matrix: potential has no value oracle");
    const int n = static_cast<int>(x.size());
    const Point g = v.gradient ? v.gradient(x) : fd_gradient(v, x);
    SymMatrix hess = v.hessian ? v.hessian(x) : fd_hessian(v, x);
    if (g.size() != x.size() || hess.size() != n) throw DomainError("criterion_matrix: oracle dimension mismatch");
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double val = gamma * g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)] - hess(i, j);
            if (std::isnan(val)) throw NumericalError("criterion_matrix: NaN at the evaluation point");
            m(i, j) = val;
        }
    }
    // Symmetrize finite-difference noise.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = 0.5 * (m(i, j) + m(j, i));
    return m;
}

Region Region::ball(int dim, double radius) {
    if (dim < 1 || dim > 4) throw DomainError("region dimension must be 1..4");
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("region radius must be positive");
    Region r;
    r.kind = Kind::Ball;
    r.dim = dim;
    r.radius = radius;
    return r;
}

Region Region::box(std::vector<double> half_widths) {
    if (half_widths.empty() || half_widths.size() > 4) throw DomainError("region dimension must be 1..4");
    for (double w : half_widths)
        if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("region half widths must be positive");
    Region r;
    r.kind = Kind::Box;
    r.dim = static_cast<int>(half_widths.size());
    r.half_widths = std::move(half_widths);
    return r;
}

bool Region::contains(std::span<const double> x) const {
    if (kind == Kind::Ball) return norm2(x) <= radius * (1.0 + 1e-12);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (std::abs(x[i]) > half_widths[i]) return false;
    return true;
}

std::string Region::describe() const {
    nlohmann::json j;
    if (kind == Kind::Ball)
        j = {{"kind", "ball"}, {"dim", dim}, {"radius", radius}};
    else
        j = {{"kind", "box"}, {"half_widths", half_widths}};
    return j.dump();
}

const char* to_string(CertVerdict v) {
    switch (v) {
        case CertVerdict::Certified: return "certified";
        case CertVerdict::Violated: return "violated";
        case CertVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

std::vector<Point> scan_points(const Region& region, const ScanConfig& cfg) {
    const int n = region.dim;
    std::vector<double> half(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        half[static_cast<std::size_t>(i)] = region.kind == Region::Kind::Ball ? region.radius : region.half_widths[static_cast<std::size_t>(i)];
    std::vector<Point> pts;

    const int g = std::max(cfg.grid_per_axis, 2);
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    Point x(static_cast<std::size_t>(n));
    while (true) {
        for (int i = 0; i < n; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            x[ui] = -half[ui] + 2.0 * half[ui] * idx[ui] / (g - 1);
        }
        if (region.contains(x)) pts.push_back(x);
        int pos = 0;
        while (pos < n && ++idx[static_cast<std::size_t>(pos)] == g) idx[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
    }

    Rng rng(cfg.seed);
    for (int k = 0; k < cfg.random_points; ++k) {
        do {
            for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = rng.uniform(-1.0, 1.0) * half[static_cast<std::size_t>(i)];
        } while (!region.contains(x));
        pts.push_back(x);
    }

    for (int k = 0; k < cfg.boundary_points; ++k) {
        if (region.kind == Region::Kind::Ball) {
            double s = 0.0;
            for (auto& v : x) {
                v = rng.normal();
                s += v * v;
            }
            s = std::sqrt(s);
            if (s == 0.0) continue;
            for (auto& v : x) v *= region.radius / s;
        } else {
            for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = rng.uniform(-1.0, 1.0) * half[static_cast<std::size_t>(i)];
            const auto face = rng.index(static_cast<std::size_t>(n));
            x[face] = rng.uniform() < 0.5 ? -half[face] : half[face];
        }
        pts.push_back(x);
    }
    return pts;
}

}  // namespace

ConcavityCertificate certify_region(const Potential& v, double gamma, const Region& region, const ScanConfig& cfg) {
    if (!std::isfinite(gamma)) throw DomainError("certify_region: gamma must be finite");
    ConcavityCertificate cert;
    cert.gamma = gamma;
    cert.region = region;
    cert.max_eigenvalue = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (const auto& x : scan_points(region, cfg)) {
        double top;
        try {
            top = symmetric_eigenvalues(criterion_matrix(v, gamma, x)).back();
        } catch (const NumericalError&) {
            continue;
        }
        if (std::isnan(top)) continue;
        ++cert.points_scanned;
        any = true;
        if (top > cert.max_eigenvalue) {
            cert.max_eigenvalue = top;
            cert.witness = x;
        }
    }
    if (!any) {
        cert.verdict = CertVerdict::Inconclusive;
        cert.max_eigenvalue = std::numeric_limits<double>::quiet_NaN();
        return cert;
    }
    cert.boundary_contact = std::abs(cert.max_eigenvalue) <= cfg.tolerance;
    cert.verdict = cert.max_eigenvalue <= cfg.tolerance ? CertVerdict::Certified : CertVerdict::Violated;
    return cert;
}

double gaussian_improved_exponent(double gamma, int n) {
    if (!(gamma > 0.0)) throw DomainError("gaussian_improved_exponent: gamma must be positive");
    if (n < 1) throw DomainError("gaussian_improved_exponent: dimension must be positive");
    if (std::isinf(gamma)) return 1.0 / n;
    return gamma / (1.0 + gamma * n);
}

}  // namespace lpbm
