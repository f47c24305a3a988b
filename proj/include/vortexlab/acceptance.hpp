#pragma once

// The verification suite behind `vortexlab verify` and the ctest acceptance
// target: every criterion with its tolerance pinned in code.

#include <iosfwd>
#include <string>
#include <vector>

namespace vortexlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs all criteria; when live is nonnull, prints one pass/fail line per
// criterion as it completes.
std::vector<CriterionResult> run_acceptance(std::ostream* live);

int count_failures(const std::vector<CriterionResult>& rs);

}  // namespace vortexlab
