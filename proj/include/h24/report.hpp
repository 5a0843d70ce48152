#pragma once

// Reporting front end: constants tables, density sweeps, optimization runs,
// the full verification suite, and machine-readable JSON/CSV output.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "h24/packing.hpp"

namespace h24 {

inline constexpr const char* kSchemaVersion = "1";

struct RunConfig {
    std::string command;  // constants | dump | sweep | optimize | verify | report
    std::optional<FamilyName> family;
    int grid = 101;
    long long mc_samples = 1'000'000;
    std::uint64_t seed = 24;
    std::string format = "json";  // json | csv | md
    std::optional<std::string> out_path;
    double inject_v0_scale = 1.0;  // test hook: perturbs V0 in the closed forms
};

// One verification check. `pass` is authoritative; for residual-style checks
// it means value <= threshold, for lower-bound checks value >= threshold.
struct Check {
    std::string name;
    double value;
    double threshold;
    bool pass;
};

// The full invariant suite (constants, gluing identities, oracle residuals,
// combinatorics, packing audits, sector scaling, regime classification,
// Monte Carlo redundancy).
std::vector<Check> run_verification(const RunConfig& cfg);

nlohmann::json checks_to_json(const std::vector<Check>& checks);

nlohmann::json cmd_constants();
nlohmann::json cmd_dump();
nlohmann::json cmd_sweep(FamilyName f, int grid);
std::string sweep_csv(FamilyName f, int grid);
nlohmann::json cmd_optimize(FamilyName f, int grid);

struct VerifyResult {
    bool ok;
    nlohmann::json audit;
};

VerifyResult cmd_verify(const RunConfig& cfg);

nlohmann::json cmd_report();
std::string report_markdown();

std::string format_csv_number(double v);  // 10 significant digits

}  // namespace h24
