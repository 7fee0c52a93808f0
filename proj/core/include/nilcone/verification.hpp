#pragma once

#include <string>
#include <vector>

namespace nilcone {

/// Outcome of one golden check. Checks are grouped by the criterion they
/// belong to ("1".."8"); `detail` carries a diff on failure.
struct CheckResult {
    std::string criterion;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs every golden check against the built-in reference values.
/// Deterministic: all randomized checks use fixed seeds.
std::vector<CheckResult> run_verification();

bool all_passed(const std::vector<CheckResult>& results);

/// Criterion labels in display order.
const std::vector<std::pair<std::string, std::string>>& criterion_titles();

}  // namespace nilcone
