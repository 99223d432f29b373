#pragma once

#include <functional>
#include <string>
#include <vector>

namespace stokes {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool ok = false;       // the checks themselves
    double seconds = 0;
    double limit = 0;      // wall clock budget in seconds
    std::string detail;
    bool pass() const { return ok && seconds <= limit; }
    std::string line() const;
};

// Criteria 1..9; an empty selection runs all of them. progress receives
// each result as soon as it is known.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {},
                                            const std::function<void(const CriterionResult&)>& progress = {},
                                            unsigned seed = 0);

}  // namespace stokes
