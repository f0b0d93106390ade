#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "asai/config.hpp"

namespace asai {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    double seconds = 0.0;
    double time_limit = 0.0;  // 0 when the check has no runtime budget
    int samples = 0;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

// The eleven acceptance checks, numbered 1..11.
int criterion_count();
CheckResult run_criterion(int id, const RunConfig& cfg);

// "tate" (1-2), "nonarch" (3-5, 9-11), "arch" (6-8).
std::vector<std::string> suite_names();
std::vector<int> suite_criteria(const std::string& suite);
SuiteReport run_suite(const std::string& suite, const RunConfig& cfg);
// Runs the named suites concurrently; reports come back in the order of the names given.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& suites, const RunConfig& cfg);

nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const SuiteReport& r);
std::string format_table(const std::vector<SuiteReport>& reports);

}  // namespace asai
