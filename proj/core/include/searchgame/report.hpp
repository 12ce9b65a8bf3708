#pragma once

#include <string>
#include <vector>

namespace searchgame {

/// One row of the reproduction suite: a headline result of the model checked
/// at a pinned tolerance.
struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string details;
};

/// Runs the full battery of reproduction checks (closed-form targets, grid
/// searches, identity checks, Monte Carlo agreement) and reports one row per
/// criterion. Heavyweight: a few minutes of compute at most.
std::vector<CriterionResult> run_reproduction_suite(unsigned workers = 0);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace searchgame
