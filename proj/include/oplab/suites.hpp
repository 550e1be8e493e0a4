#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "oplab/report.hpp"

namespace oplab {

struct SuiteConfig {
    std::string suite;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    double tolerance = kDefaultTolerance;
    int degree_cap = 6;
    std::optional<std::string> output_path;
    bool keep_reports = false;
};

struct SuiteSummary {
    SuiteConfig config;
    std::uint64_t trials_run = 0;
    std::uint64_t reports_checked = 0;
    std::uint64_t failures = 0;
    double worst_slack = 0.0;
    std::uint64_t equality_hits = 0;
    double wall_time_ms = 0.0;
    unsigned threads = 1;
    std::vector<InequalityReport> failing_reports;
    std::vector<InequalityReport> reports; // only with keep_reports
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Reports produced by one trial. Preconditions that fail inside the trial
/// come back as error reports.
std::vector<InequalityReport> run_trial(const std::string& suite, std::uint64_t seed, double tolerance,
                                        int degree_cap);

/// OPLAB_THREADS if set to a positive integer, else the hardware concurrency.
unsigned worker_threads();

/// Trial i uses seed ^ i. Writes the JSON summary when output_path is set.
SuiteSummary run_suite(const SuiteConfig& config);

/// Everything except wall time and thread count.
nlohmann::json deterministic_json(const SuiteSummary& s);
/// {"deterministic": ..., "timing": {"wall_time_ms", "threads"}}.
nlohmann::json summary_to_json(const SuiteSummary& s);

void write_json_file(const std::string& path, const nlohmann::json& j);

} // namespace oplab
