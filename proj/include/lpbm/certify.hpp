// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lpbm/measures.hpp"
#include "lpbm/numeric.hpp"

namespace lpbm {

/// gamma grad V (x) grad V - Hess V at x. Missing derivative oracles are
/// replaced by central differences with step 1e-4 (1 + |x|).
/// Throws NumericalError when the result contains NaN.
SymMatrix criterion_matrix(const Potential& v, double gamma, std::span<const double> x);

struct Region {
    enum class Kind { Ball, Box };
    Kind kind = Kind::Ball;
    int dim = 2;
    double radius = 1.0;              ///< Ball
    std::vector<double> half_widths;  ///< Box

    static Region ball(int dim, double radius);
    static Region box(std::vector<double> half_widths);
    bool contains(std::span<const double> x) const;
    std::string describe() const;
};

struct ScanConfig {
    int grid_per_axis = 21;
    int random_points = 2000;
    int boundary_points = 512;  ///< points on the region's outer surface
    std::uint64_t seed = 7;
    double tolerance = 1e-8;
};

enum class CertVerdict { Certified, Violated, Inconclusive };

const char* to_string(CertVerdict v);

struct ConcavityCertificate {
    double gamma = 0.0;
    Region region;
    double max_eigenvalue = 0.0;
    Point witness;  ///< point attaining max_eigenvalue
    CertVerdict verdict = CertVerdict::Inconclusive;
    /// max_eigenvalue within +-tolerance of 0: the region touches the edge of
    /// the certified set.
    bool boundary_contact = false;
    std::size_t points_scanned = 0;
};

/// Largest eigenvalue of the criterion matrix over a scan of `region`
/// (tensor grid, seeded random interior points, seeded surface points).
/// Certified when it stays <= tolerance, Violated otherwise; Inconclusive only
/// when no finite value could be computed.
ConcavityCertificate certify_region(const Potential& v, double gamma, const Region& region, const ScanConfig& cfg = {});

/// gamma / (1 + gamma n): concavity order of the Gaussian measure on subsets
/// of the ball of radius 1/sqrt(gamma). Requires gamma > 0.
double gaussian_improved_exponent(double gamma, int n);

}  // namespace lpbm
