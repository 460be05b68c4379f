// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>

#include "json.hpp"
#include "lpbm/combine.hpp"
#include "lpbm/verify.hpp"

namespace lpbm::detail {

using json = nlohmann::json;

inline json ext_json(ExtReal v) {
    if (v.is_finite()) return v.value();
    return v.to_string();
}

inline json pvec_json(const PVector& p) {
    json arr = json::array();
    for (ExtReal v : p) arr.push_back(ext_json(v));
    return arr;
}

inline int grid_resolution(const VerifyConfig& cfg, int dim) {
    return cfg.resolution > 0 ? cfg.resolution : default_resolution(dim);
}

inline MeasureConfig measure_config(const VerifyConfig& cfg, int dim) {
    MeasureConfig m = cfg.measure;
    if (m.resolution == 0) m.resolution = grid_resolution(cfg, dim);
    return m;
}

inline int firey_directions(const VerifyConfig& cfg, int dim) {
    return cfg.firey_directions > 0 ? cfg.firey_directions : default_firey_directions(dim);
}

/// M_gamma^lambda(a, b) and the spread obtained by moving both arguments by
/// their error bars (the mean is monotone in each argument).
std::pair<double, double> mean_with_error(ExtReal gamma, Weight lambda, double a, double ea, double b, double eb);

std::string label(const char* name, double v);
std::string triple_label(const Triple& t);

json verify_config_json(const VerifyConfig& cfg, int dim);

}  // namespace lpbm::detail
