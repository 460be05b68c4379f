// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbm/lpbm.h"

#include <cstdio>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "lpbm/combine.hpp"
#include "lpbm/errors.hpp"
#include "lpbm/scenario.hpp"
#include "lpbm/verify.hpp"

struct lpbm_body {
    lpbm::Body body;
};
struct lpbm_density {
    lpbm::Density density;
};
struct lpbm_scenario {
    lpbm::Scenario scenario;
};
struct lpbm_run {
    lpbm::RunResult result;
};

namespace {

thread_local std::string g_last_error;

lpbm_status fail(lpbm_status status, const std::string& what) {
    g_last_error = what;
    return status;
}

template <class F>
lpbm_status guard(F&& fn) {
    try {
        g_last_error.clear();
        fn();
        return LPBM_OK;
    } catch (const lpbm::ConfigError& e) {
        return fail(LPBM_ERR_CONFIG, e.what());
    } catch (const lpbm::DomainError& e) {
        return fail(LPBM_ERR_DOMAIN, e.what());
    } catch (const lpbm::Unsupported& e) {
        return fail(LPBM_ERR_UNSUPPORTED, e.what());
    } catch (const lpbm::NumericalError& e) {
        return fail(LPBM_ERR_NUMERICAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LPBM_ERR_RUNTIME, "out of memory");
    } catch (const std::exception& e) {
        return fail(LPBM_ERR_RUNTIME, e.what());
    } catch (...) {
        return fail(LPBM_ERR_RUNTIME, "unknown error");
    }
}

#define LPBM_REQUIRE(cond)                                                       \
    do {                                                                         \
        if (!(cond)) return fail(LPBM_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
    } while (0)

void emit(lpbm_write_fn write, void* user, const std::string& text) { write(text.data(), text.size(), user); }

std::vector<double> copy(const double* v, int n) { return std::vector<double>(v, v + n); }

}  // namespace

extern "C" {

const char* lpbm_version(void) { return "0.1.0"; }

const char* lpbm_status_string(lpbm_status status) {
    switch (status) {
        case LPBM_OK: return "ok";
        case LPBM_ERR_INVALID_ARGUMENT: return "invalid argument";
        case LPBM_ERR_DOMAIN: return "domain error";
        case LPBM_ERR_UNSUPPORTED: return "unsupported";
        case LPBM_ERR_NUMERICAL: return "numerical error";
        case LPBM_ERR_CONFIG: return "config error";
        case LPBM_ERR_IO: return "i/o error";
        case LPBM_ERR_RUNTIME: return "runtime error";
    }
    return "unknown status";
}

const char* lpbm_last_error(void) { return g_last_error.c_str(); }

lpbm_status lpbm_p_mean(double p, double lambda, double a, double b, double* out) {
    LPBM_REQUIRE(out);
    return guard([&] { *out = lpbm::p_mean(lpbm::ExtReal::from_double(p), lpbm::Weight(lambda), a, b); });
}

lpbm_status lpbm_gamma_compose(const double* p, size_t n, double alpha, double* out) {
    LPBM_REQUIRE(p && n > 0 && out);
    return guard([&] {
        lpbm::PVector pv;
        for (size_t i = 0; i < n; ++i) pv.push_back(lpbm::ExtReal::from_double(p[i]));
        *out = lpbm::gamma_compose(pv, lpbm::ExtReal::from_double(alpha)).to_double();
    });
}

lpbm_status lpbm_body_lq_ball(double q, const double* radii, int dim, lpbm_body** out) {
    LPBM_REQUIRE(radii && dim > 0 && out);
    return guard([&] { *out = new lpbm_body{lpbm::Body::lq_ball(lpbm::ExtReal::from_double(q), copy(radii, dim))}; });
}

lpbm_status lpbm_body_box(const double* radii, int dim, lpbm_body** out) {
    LPBM_REQUIRE(radii && dim > 0 && out);
    return guard([&] { *out = new lpbm_body{lpbm::Body::box(copy(radii, dim))}; });
}

lpbm_status lpbm_body_h_polytope(const double* normals, const double* offsets, int count, int dim, lpbm_body** out) {
    LPBM_REQUIRE(normals && offsets && count > 0 && dim > 0 && out);
    return guard([&] {
        std::vector<lpbm::Body::Halfspace> hs;
        for (int j = 0; j < count; ++j) hs.push_back({copy(normals + static_cast<std::ptrdiff_t>(j) * dim, dim), offsets[j]});
        *out = new lpbm_body{lpbm::Body::h_polytope(std::move(hs))};
    });
}

lpbm_status lpbm_body_coord_combine(const lpbm_body* a, const lpbm_body* b, double lambda, const double* p,
                                    int resolution, lpbm_body** out) {
    LPBM_REQUIRE(a && b && p && out && resolution > 1);
    return guard([&] {
        lpbm::PVector pv;
        for (int i = 0; i < a->body.dim(); ++i) pv.push_back(lpbm::ExtReal::from_double(p[i]));
        auto g = lpbm::coord_combine(a->body, b->body, lpbm::Weight(lambda), pv, resolution);
        *out = new lpbm_body{lpbm::Body::grid(std::move(g))};
    });
}

lpbm_status lpbm_body_firey_combine(const lpbm_body* a, const lpbm_body* b, double lambda, double p, int directions,
                                    lpbm_body** out) {
    LPBM_REQUIRE(a && b && out);
    return guard([&] {
        const int d = directions > 0 ? directions : lpbm::default_firey_directions(a->body.dim());
        *out = new lpbm_body{
            lpbm::firey_combine(a->body, b->body, lpbm::Weight(lambda), lpbm::ExtReal::from_double(p), d)};
    });
}

lpbm_status lpbm_body_minkowski_combine(const lpbm_body* a, const lpbm_body* b, double lambda, lpbm_body** out) {
    LPBM_REQUIRE(a && b && out);
    return guard([&] { *out = new lpbm_body{lpbm::minkowski_combine(a->body, b->body, lpbm::Weight(lambda))}; });
}

void lpbm_body_free(lpbm_body* body) { delete body; }

int lpbm_body_dim(const lpbm_body* body) { return body ? body->body.dim() : 0; }

lpbm_status lpbm_body_contains(const lpbm_body* body, const double* x, int* out) {
    LPBM_REQUIRE(body && x && out);
    return guard([&] {
        *out = body->body.contains(std::span<const double>(x, static_cast<size_t>(body->body.dim()))) ? 1 : 0;
    });
}

lpbm_status lpbm_body_support(const lpbm_body* body, const double* u, double* out) {
    LPBM_REQUIRE(body && u && out);
    return guard([&] { *out = body->body.support(std::span<const double>(u, static_cast<size_t>(body->body.dim()))); });
}

lpbm_status lpbm_body_describe(const lpbm_body* body, lpbm_write_fn write, void* user) {
    LPBM_REQUIRE(body && write);
    return guard([&] { emit(write, user, body->body.describe()); });
}

lpbm_status lpbm_density_lebesgue(int dim, lpbm_density** out) {
    LPBM_REQUIRE(out);
    return guard([&] { *out = new lpbm_density{lpbm::Density::lebesgue(dim)}; });
}

lpbm_status lpbm_density_gaussian(int dim, lpbm_density** out) {
    LPBM_REQUIRE(out);
    return guard([&] { *out = new lpbm_density{lpbm::Density::gaussian(dim)}; });
}

lpbm_status lpbm_density_power_convex(int dim, double alpha, double beta, lpbm_density** out) {
    LPBM_REQUIRE(out);
    return guard(
        [&] { *out = new lpbm_density{lpbm::Density::power_convex(dim, lpbm::ExtReal::from_double(alpha), beta)}; });
}

void lpbm_density_free(lpbm_density* density) { delete density; }

lpbm_status lpbm_measure(const lpbm_body* body, const lpbm_density* density, int resolution, double* value,
                         double* abs_error) {
    LPBM_REQUIRE(body && density && value && resolution >= 0);
    return guard([&] {
        lpbm::MeasureConfig cfg;
        cfg.resolution = resolution;
        const auto m = lpbm::measure(body->body, density->density, cfg);
        *value = m.value;
        if (abs_error) *abs_error = m.abs_error;
    });
}

lpbm_status lpbm_scenario_load(const char* path, const uint64_t* seed, lpbm_scenario** out) {
    LPBM_REQUIRE(path && out);
    return guard([&] {
        std::optional<std::uint64_t> s;
        if (seed) s = *seed;
        *out = new lpbm_scenario{lpbm::Scenario::load(path, s)};
    });
}

lpbm_status lpbm_scenario_parse(const char* text, const uint64_t* seed, lpbm_scenario** out) {
    LPBM_REQUIRE(text && out);
    return guard([&] {
        std::optional<std::uint64_t> s;
        if (seed) s = *seed;
        *out = new lpbm_scenario{lpbm::Scenario::parse(text, s)};
    });
}

void lpbm_scenario_free(lpbm_scenario* scenario) { delete scenario; }

lpbm_status lpbm_scenario_dump(const lpbm_scenario* scenario, lpbm_write_fn write, void* user) {
    LPBM_REQUIRE(scenario && write);
    return guard([&] { emit(write, user, scenario->scenario.dump()); });
}

lpbm_status lpbm_scenario_output_dir(const lpbm_scenario* scenario, lpbm_write_fn write, void* user) {
    LPBM_REQUIRE(scenario && write);
    return guard([&] { emit(write, user, scenario->scenario.output_dir()); });
}

size_t lpbm_scenario_check_count(const lpbm_scenario* scenario) {
    return scenario ? scenario->scenario.check_count() : 0;
}

lpbm_status lpbm_scenario_emit_curve(const lpbm_scenario* scenario, const char* curve, lpbm_write_fn write,
                                     void* user) {
    LPBM_REQUIRE(scenario && curve && write);
    return guard([&] { emit(write, user, lpbm::curve_to_csv(scenario->scenario.curve(curve))); });
}

lpbm_status lpbm_scenario_run(const lpbm_scenario* scenario, int jobs, lpbm_run** out) {
    LPBM_REQUIRE(scenario && out && jobs >= 1);
    return guard([&] {
        lpbm::RunOptions opts;
        opts.jobs = jobs;
        *out = new lpbm_run{scenario->scenario.run(opts)};
    });
}

void lpbm_run_free(lpbm_run* run) { delete run; }

int lpbm_run_exit_status(const lpbm_run* run, int strict) {
    return run ? lpbm::run_exit_status(run->result, strict != 0) : 1;
}

size_t lpbm_run_report_count(const lpbm_run* run) { return run ? run->result.reports.size() : 0; }

lpbm_status lpbm_run_report_json(const lpbm_run* run, lpbm_write_fn write, void* user) {
    LPBM_REQUIRE(run && write);
    return guard([&] { emit(write, user, lpbm::reports_to_json(run->result.reports)); });
}

lpbm_status lpbm_run_detail_csv(const lpbm_run* run, lpbm_write_fn write, void* user) {
    LPBM_REQUIRE(run && write);
    return guard([&] { emit(write, user, lpbm::reports_to_csv(run->result.reports)); });
}

lpbm_status lpbm_run_summary(const lpbm_run* run, int strict, lpbm_write_fn write, void* user) {
    LPBM_REQUIRE(run && write);
    return guard([&] { emit(write, user, lpbm::reports_to_summary(run->result.reports, strict != 0)); });
}

lpbm_status lpbm_list_checks(lpbm_write_fn write, void* user) {
    LPBM_REQUIRE(write);
    return guard([&] {
        std::ostringstream os;
        std::ostringstream explore;
        char line[512];
        for (const auto& c : lpbm::check_catalog()) {
            std::snprintf(line, sizeof line, "%-32s %-48s %s\n", c.name, c.anchor, c.statement);
            (c.exploratory ? explore : os) << line;
        }
        if (!explore.str().empty()) os << "\nexploratory (never gating):\n" << explore.str();
        emit(write, user, os.str());
    });
}

}  // extern "C"
