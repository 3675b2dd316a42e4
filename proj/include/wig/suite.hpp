#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wig/group.hpp"

namespace wig {

/// One streamed check result. `tag` names the mathematical law the check
/// instantiates (stable identifiers, suitable for CI grep).
struct ReportRecord {
    std::string name;
    std::string tag;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct SuiteConfig {
    std::uint64_t seed = 20260823;
    /// Harness self-test: negates one Wigner table inside the first criterion
    /// so the suite must report a failure.
    bool inject_fault = false;
    /// 0 = run everything; otherwise run the single criterion with this index.
    int only_criterion = 0;
};

struct CriterionResult {
    int index = 0;
    std::string title;
    bool pass = false;
    double seconds = 0.0;
    std::vector<ReportRecord> records;
};

/// The default battery groups: Z3, Z5, Z7, Z9, Z3xZ3, Z3xZ5, Z27.
std::vector<Group> default_test_groups();

std::vector<CriterionResult> run_acceptance_suite(const SuiteConfig& cfg);

}  // namespace wig
