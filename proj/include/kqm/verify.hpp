#pragma once

#include "kqm/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kqm {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;

    bool passed() const { return residual <= tolerance; }
};

/// Machine-readable record of a differential-test run. Reproducible
/// byte-for-byte given (suite, seed, trials, dims, tol): no timing fields,
/// no parallelism-dependent content.
struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<int> dims;
    double tolerance = 0.0; // suite headline; per-check tolerances in checks
    double max_residual = 0.0;
    bool passed = true;
    std::vector<CheckResult> checks;

    nlohmann::json to_json() const;
};

struct VerifyOptions {
    std::vector<int> dims;  // empty -> suite defaults
    int trials = 0;         // 0 -> suite defaults
    std::uint64_t seed = 1;
    std::optional<double> tol_override; // replaces every check tolerance
};

/// The seven suites, in canonical order (excludes the "all" pseudo-suite).
const std::vector<std::string>& suite_names();

/// Runs one suite; throws std::invalid_argument on an unknown name.
VerificationReport run_suite(const std::string& suite, const VerifyOptions& opts);

/// Runs every suite in canonical order.
std::vector<VerificationReport> run_all(const VerifyOptions& opts);

/// Combined {"suite": "all", "passed": ..., "reports": [...]} document.
nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports,
                               std::uint64_t seed);

}  // namespace kqm
