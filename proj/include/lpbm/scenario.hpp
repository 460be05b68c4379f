// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpbm/measures.hpp"
#include "lpbm/report.hpp"

namespace lpbm {

inline constexpr const char* kScenarioSchema = "lpbm-scenario/1";

struct RunOptions {
    int jobs = 1;  ///< concurrent checks; reports keep input order
};

/// Outcome of a scenario run.
struct RunResult {
    std::vector<Report> reports;
    bool runtime_error = false;  ///< some check threw after validation
};

/// A validated scenario: named bodies, densities, check invocations and
/// curves, with every default written out.
class Scenario {
public:
    /// Parses and validates JSON text. Unknown keys, unresolved names and bad
    /// values throw ConfigError naming the JSON pointer. `seed` replaces the
    /// top-level seed before defaults are materialized.
    static Scenario parse(const std::string& text, std::optional<std::uint64_t> seed = std::nullopt);
    static Scenario load(const std::string& path, std::optional<std::uint64_t> seed = std::nullopt);

    /// Materialized form; parsing it again yields the same digests.
    std::string dump() const;

    std::size_t check_count() const;
    std::vector<std::string> curve_names() const;
    /// Output directory from the scenario, empty when unset.
    std::string output_dir() const;

    RunResult run(const RunOptions& opts = {}) const;

    /// Evaluates a named curve.
    std::vector<CurvePoint> curve(const std::string& name) const;

private:
    struct Impl;
    explicit Scenario(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// t, value, abs_error rows with a header line.
std::string curve_to_csv(const std::vector<CurvePoint>& points);

/// Exit status for a finished run: 0 when no gating check failed (boundary
/// counts as failing only when `strict`), 1 otherwise.
int run_exit_status(const RunResult& result, bool strict);

}  // namespace lpbm
