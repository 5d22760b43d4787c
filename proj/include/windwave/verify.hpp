#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace windwave {

struct CriterionResult {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the nine-point verification suite (plus the feasible-configuration
/// companions C2b and C8b). Deterministic for a fixed seed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0, bool parallel = true);

/// Render the one-line-per-criterion report.
std::string format_report(const std::vector<CriterionResult>& results);

}  // namespace windwave
