#pragma once

#include <string>
#include <vector>

namespace aperiodica::verify {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full desk-scale verification battery (eight criteria covering
/// the bundled example systems) and reports one result per criterion.
std::vector<CriterionResult> run_acceptance(int threads = 0);

bool all_pass(const std::vector<CriterionResult>& results);

/// "PASS — name: detail" / "FAIL — name: detail".
std::string format_result(const CriterionResult& result);

}  // namespace aperiodica::verify
