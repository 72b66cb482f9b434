#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/scenario.hpp"

namespace aloha {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Self-validation of a scenario: model restrictions, analytic vs brute-force
// 2D quadrature for the mean interference, Laplace transform shape properties,
// and (with `full`) Monte Carlo agreement at 3 standard errors.
std::vector<CheckResult> run_checks(const NetworkScenario& s, bool full,
                                    long long trials, uint64_t seed);

std::string format_report(const std::vector<CheckResult>& results);

} // namespace aloha
