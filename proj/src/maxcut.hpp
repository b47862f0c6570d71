#pragma once

#include <cstdint>

#include "graph.hpp"

namespace qx {

struct CutSolution {
    int value = 0;
    std::vector<std::uint8_t> assignment;  // side bit per node
};

struct BnbResult {
    CutSolution cut;
    bool optimal = false;
    int upper_bound = 0;  // certified bound on the optimum (= value when optimal)
    std::uint64_t nodes_explored = 0;
};

int cut_value(const Graph& g, const std::vector<std::uint8_t>& assignment);

// Exhaustive search over 2^(n-1) assignments (node 0 fixed to side 0),
// enumerated in Gray-code order with O(degree) updates. Cap n <= 28.
CutSolution brute_force(const Graph& g);

// Exact branch and bound. Incumbent from a greedy pass plus single-flip
// local search; bound = decided cut + best decided-undecided side per node
// + all undecided-undecided edges. A negative budget means no time limit;
// on budget exhaustion the best incumbent is returned with optimal = false
// and a valid upper bound.
BnbResult branch_and_bound(const Graph& g, double time_budget_seconds = -1.0);

}  // namespace qx
