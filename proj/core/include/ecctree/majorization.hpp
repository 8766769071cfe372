#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ecctree/tree.hpp"

namespace ecc {

// True iff pi1 is majorized by pi2: equal totals and every prefix sum of
// pi1 at most the corresponding prefix sum of pi2. Both non-increasing by
// DegreeSequence construction; lengths must match.
bool majorizes(const DegreeSequence& pi2, const DegreeSequence& pi1);

// Stepwise refinement from pi1 up to pi2. Consecutive sequences differ at
// exactly two positions j < k, +1 at j and -1 at k, every intermediate a
// valid non-increasing tree degree sequence.
struct MajorizationChain {
    std::vector<std::vector<int>> steps;          // first = pi1, last = pi2
    std::vector<std::pair<int, int>> step_edits;  // 0-based (j, k) per step
};

MajorizationChain refinement_chain(const DegreeSequence& pi1, const DegreeSequence& pi2);

// Ecc of the greedy trees at both ends plus the per-step values along the
// refinement chain; total eccentricity never increases along it.
struct GreedyEccComparison {
    long long ecc_from = 0; // Ecc(greedy_tree(pi1))
    long long ecc_to = 0;   // Ecc(greedy_tree(pi2))
    MajorizationChain chain;
    std::vector<long long> chain_ecc; // one per chain step
};

GreedyEccComparison compare_greedy_ecc(const DegreeSequence& pi1, const DegreeSequence& pi2);

// {"steps": [[d,...],...], "edits": [[j,k],...], "ecc": [int,...]}
std::string to_json(const GreedyEccComparison& comparison);

} // namespace ecc
