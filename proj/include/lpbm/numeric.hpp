// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace lpbm {

using Point = std::vector<double>;

/// Seeded generator with platform-independent variate formulas
/// (std::uniform_real_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform on {0, ..., n-1}; n > 0.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n; }
    /// Standard normal (Box-Muller, one variate per call).
    double normal();

private:
    std::mt19937_64 engine_;
};

/// Directions on the unit sphere restricted to the closed positive octant.
///
/// n = 1: {(1)}. n = 2: `count` equiangular directions from e_1 to e_2
/// inclusive. n = 3: a Fibonacci lattice on the octant patch plus the axes.
/// n >= 4: seeded pseudo-random directions plus the axes.
std::vector<Point> octant_directions(int n, int count);

/// `count` equiangular unit vectors covering the full circle.
std::vector<Point> circle_directions(int count);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
/// <|a|, |b|>: the pairing used by unconditional sets.
double abs_dot(std::span<const double> a, std::span<const double> b);

/// Pairwise (cascade) sum, fixed association order.
double pairwise_sum(std::span<const double> values);

/// Dense symmetric matrix for n <= 4 work.
class SymMatrix {
public:
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), 0.0) {}

    int size() const noexcept { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    double max_asymmetry() const;

private:
    int n_;
    std::vector<double> a_;
};

/// Eigenvalues (ascending) by cyclic Jacobi rotations; off-diagonal mass is
/// driven below `tol`.
std::vector<double> symmetric_eigenvalues(const SymMatrix& m, double tol = 1e-10);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

/// Shortest round-trip decimal for a double ("inf"/"-inf"/"nan" for the specials).
std::string format_double(double v);

}  // namespace lpbm
