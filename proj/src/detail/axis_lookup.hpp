// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "lpbm/means.hpp"

namespace lpbm::detail {

/// Grid index lookup for coordinate-wise means, done in the forward domain of
/// the mean so that no inverse power is evaluated per pair.
///
/// thresholds[k] = forward((k + offset) h); index(s) is the largest k with
/// (k + offset) h <= inverse(s), or -1. offset 0.5 tests cell centers, offset 0
/// finds the cell containing the value.
struct AxisLookup {
    MeanKernel kernel;
    std::vector<double> thresholds;

    AxisLookup(ExtReal p, Weight lambda, double h, int n, double offset) : kernel(p, lambda) {
        thresholds.resize(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) thresholds[static_cast<std::size_t>(k)] = kernel.forward((k + offset) * h);
    }

    int index(double s) const {
        if (std::isnan(s)) return -1;
        std::ptrdiff_t pos;
        if (kernel.increasing()) {
            pos = std::upper_bound(thresholds.begin(), thresholds.end(), s) - thresholds.begin();
        } else {
            pos = std::upper_bound(thresholds.begin(), thresholds.end(), s, std::greater<>()) - thresholds.begin();
        }
        return static_cast<int>(pos) - 1;
    }
};

}  // namespace lpbm::detail
