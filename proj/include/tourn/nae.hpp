#pragma once

// Not-all-equal 3-SAT over boolean variables, solved by DPLL with
// propagation: two equal values in a clause force the third to differ.

#include "tourn/budget.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace tourn {

struct NaeProblem {
    int variables = 0;
    std::vector<std::array<int, 3>> clauses;  // distinct variable indices
};

// value[v] in {0, 1}. Variables are branched in order of decreasing clause
// degree; the first decision is fixed to 0, which is safe because flipping
// every value preserves all NAE constraints.
Search<std::vector<int>> solve_nae(const NaeProblem& problem, std::uint64_t budget = default_node_budget);

bool satisfies_nae(const NaeProblem& problem, const std::vector<int>& values);

} // namespace tourn
