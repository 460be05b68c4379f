// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "lpbm/body.hpp"
#include "lpbm/means.hpp"

namespace lpbm {

enum class CombinationKind { CoordPlusP, FireyOPlusP, Minkowski };

const char* to_string(CombinationKind kind);

/// Boundary points of the positive-octant trace of `body`, taken along rays
/// through a grid on the faces of the unit cube. `per_face` rays per face edge
/// (so (per_face + 1)^(n-1) rays per face). Dimensions 1..3.
std::vector<Point> octant_boundary_samples(const Body& body, int per_face);

/// Grid image of (1 - lambda) A +_p lambda B on an N^n positive-octant grid.
///
/// Every pair of boundary samples (a, b) is mapped to the coordinate-wise mean
/// z_i = M_{p_i}^lambda(a_i, b_i); each cell whose center is dominated by z is
/// marked and the result is closed downward. Marked centers therefore belong to
/// the true combination. Cell size per axis is the image extent divided by N.
/// Throws Unsupported for dim > 3.
GridSet coord_combine(const Body& a, const Body& b, Weight lambda, const PVector& p, int resolution);

/// Default Firey direction count: 256 in the plane, 512 otherwise.
int default_firey_directions(int dim);

/// Wulff body {x : <|x|, u> <= M_p^lambda(h_A(u), h_B(u)) for u in the octant
/// direction set}. An outer approximation of the Firey combination that
/// shrinks as directions are added. Requires support oracles on both operands.
Body firey_combine(const Body& a, const Body& b, Weight lambda, ExtReal p, int direction_count);

/// (1 - lambda) A + lambda B with support (1 - lambda) h_A + lambda h_B.
/// Membership is decided against that support on a fixed dense octant
/// direction set (2048 in the plane, 1024 otherwise).
Body minkowski_combine(const Body& a, const Body& b, Weight lambda);

}  // namespace lpbm
