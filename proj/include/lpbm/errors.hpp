// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace lpbm {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operation not available for this representation (missing oracle, dimension too high).
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical breakdown: NaN from a finite-difference stencil, rejection sampling exhausted.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scenario file problem. `where()` is a JSON-pointer style location.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

}  // namespace lpbm
