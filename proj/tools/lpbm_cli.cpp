// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lpbm/lpbm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitConfig = 2;

void append(const char* data, size_t size, void* user) { static_cast<std::string*>(user)->append(data, size); }

int report_error(lpbm_status status) {
    std::cerr << "lpbm: " << lpbm_status_string(status) << ": " << lpbm_last_error() << "\n";
    return status == LPBM_ERR_CONFIG ? kExitConfig : kExitFailed;
}

struct ScenarioHandle {
    lpbm_scenario* ptr = nullptr;
    ~ScenarioHandle() { lpbm_scenario_free(ptr); }
};

struct RunHandle {
    lpbm_run* ptr = nullptr;
    ~RunHandle() { lpbm_run_free(ptr); }
};

bool write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    return static_cast<bool>(out);
}

int cmd_run(const std::string& config, bool strict, int jobs, std::optional<std::uint64_t> seed,
            const std::string& out_flag) {
    ScenarioHandle sc;
    const std::uint64_t seed_value = seed.value_or(0);
    if (auto st = lpbm_scenario_load(config.c_str(), seed ? &seed_value : nullptr, &sc.ptr); st != LPBM_OK)
        return report_error(st);

    std::string out_dir = out_flag;
    if (out_dir.empty()) lpbm_scenario_output_dir(sc.ptr, append, &out_dir);
    if (out_dir.empty()) out_dir = "lpbm-out";

    RunHandle run;
    if (auto st = lpbm_scenario_run(sc.ptr, jobs, &run.ptr); st != LPBM_OK) return report_error(st);

    std::string report, detail, summary;
    lpbm_run_report_json(run.ptr, append, &report);
    lpbm_run_detail_csv(run.ptr, append, &detail);
    lpbm_run_summary(run.ptr, strict ? 1 : 0, append, &summary);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    const std::filesystem::path dir(out_dir);
    if (ec || !write_file(dir / "report.json", report) || !write_file(dir / "detail.csv", detail) ||
        !write_file(dir / "summary.txt", summary)) {
        std::cerr << "lpbm: cannot write reports to '" << out_dir << "'\n";
        return kExitFailed;
    }
    std::cout << summary;
    return lpbm_run_exit_status(run.ptr, strict ? 1 : 0);
}

int cmd_list_checks() {
    std::string text;
    if (auto st = lpbm_list_checks(append, &text); st != LPBM_OK) return report_error(st);
    std::cout << text;
    return kExitOk;
}

int cmd_emit_curve(const std::string& config, const std::string& curve) {
    ScenarioHandle sc;
    if (auto st = lpbm_scenario_load(config.c_str(), nullptr, &sc.ptr); st != LPBM_OK) return report_error(st);
    std::string csv;
    if (auto st = lpbm_scenario_emit_curve(sc.ptr, curve.c_str(), append, &csv); st != LPBM_OK)
        return report_error(st);
    std::cout << csv;
    return kExitOk;
}

int cmd_dump_config(const std::string& config, std::optional<std::uint64_t> seed) {
    ScenarioHandle sc;
    const std::uint64_t seed_value = seed.value_or(0);
    if (auto st = lpbm_scenario_load(config.c_str(), seed ? &seed_value : nullptr, &sc.ptr); st != LPBM_OK)
        return report_error(st);
    std::string text;
    lpbm_scenario_dump(sc.ptr, append, &text);
    std::cout << text;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lpbm: numerical checks of Brunn-Minkowski type inequalities"};
    app.require_subcommand(1);
    app.set_version_flag("--version", lpbm_version());

    std::string config, curve, out_dir;
    bool strict = false;
    int jobs = 1;
    std::optional<std::uint64_t> seed;

    auto* run = app.add_subcommand("run", "run every check in a scenario and write report.json, detail.csv, summary.txt");
    run->add_option("config", config, "scenario file")->required();
    run->add_flag("--strict", strict, "treat boundary verdicts as failures");
    run->add_option("--jobs", jobs, "maximum concurrent checks")->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "override the scenario seed");
    run->add_option("--out", out_dir, "output directory");

    auto* list = app.add_subcommand("list-checks", "list checks with their anchors");

    auto* emit = app.add_subcommand("emit-curve", "write a named curve as CSV (t,value,abs_error)");
    emit->add_option("config", config, "scenario file")->required();
    emit->add_option("curve", curve, "curve name")->required();

    auto* dump = app.add_subcommand("dump-config", "print the scenario with all defaults filled in");
    dump->add_option("config", config, "scenario file")->required();
    dump->add_option("--seed", seed, "override the scenario seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (run->parsed()) return cmd_run(config, strict, jobs, seed, out_dir);
    if (list->parsed()) return cmd_list_checks();
    if (emit->parsed()) return cmd_emit_curve(config, curve);
    if (dump->parsed()) return cmd_dump_config(config, seed);
    return kExitConfig;
}
