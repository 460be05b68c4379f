// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbm/numeric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "lpbm/errors.hpp"

namespace lpbm {

double Rng::normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<Point> octant_directions(int n, int count) {
    if (n < 1) throw DomainError("octant_directions: dimension must be positive");
    if (count < 2 && n > 1) throw DomainError("octant_directions: need at least two directions");
    std::vector<Point> out;
    if (n == 1) {
        out.push_back({1.0});
        return out;
    }
    if (n == 2) {
        out.reserve(static_cast<std::size_t>(count));
        for (int k = 0; k < count; ++k) {
            const double th = 0.5 * std::numbers::pi * k / (count - 1);
            out.push_back({std::cos(th), std::sin(th)});
        }
        out.front() = {1.0, 0.0};
        out.back() = {0.0, 1.0};
        return out;
    }
    for (int i = 0; i < n; ++i) {
        Point e(static_cast<std::size_t>(n), 0.0);
        e[static_cast<std::size_t>(i)] = 1.0;
        out.push_back(std::move(e));
    }
    if (n == 3) {
        // z uniform in (0,1) gives equal-area bands; golden-angle azimuth folded
        // into the quarter turn.
        const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
        for (int k = 0; k < count; ++k) {
            const double z = 1.0 - (k + 0.5) / count;
            const double frac = std::fmod(k * golden, 1.0);
            const double phi = 0.5 * std::numbers::pi * frac;
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            out.push_back({r * std::cos(phi), r * std::sin(phi), z});
        }
        return out;
    }
    Rng rng(0x6f637461ULL + static_cast<std::uint64_t>(n));
    for (int k = 0; k < count; ++k) {
        Point d(static_cast<std::size_t>(n));
        double s = 0.0;
        for (auto& v : d) {
            v = std::abs(rng.normal());
            s += v * v;
        }
        s = std::sqrt(s);
        for (auto& v : d) v /= s;
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<Point> circle_directions(int count) {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double th = 2.0 * std::numbers::pi * k / count;
        out.push_back({std::cos(th), std::sin(th)});
    }
    return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double abs_dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i]) * std::abs(b[i]);
    return s;
}

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

double SymMatrix::max_asymmetry() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
    return m;
}

std::vector<double> symmetric_eigenvalues(const SymMatrix& m, double tol) {
    const int n = m.size();
    SymMatrix a = m;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (m(i, j) + m(j, i));

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (std::sqrt(off) < tol) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::string fnv1a_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace lpbm
