#include "ecctree/majorization.hpp"

#include <nlohmann/json.hpp>

#include "ecctree/constructors.hpp"
#include "ecctree/metrics.hpp"

namespace ecc {

bool majorizes(const DegreeSequence& pi2, const DegreeSequence& pi1) {
    if (pi1.n() != pi2.n())
        fail(Errc::bad_parameter, "majorization compares sequences of equal length");
    long long sum1 = 0, sum2 = 0;
    for (int i = 0; i < pi1.n(); ++i) {
        sum1 += pi1[i];
        sum2 += pi2[i];
        if (sum1 > sum2) return false;
    }
    return sum1 == sum2; // holds automatically for tree degree sequences
}

MajorizationChain refinement_chain(const DegreeSequence& pi1, const DegreeSequence& pi2) {
    if (!majorizes(pi2, pi1))
        fail(Errc::bad_parameter, "refinement chain needs pi1 majorized by pi2");
    MajorizationChain chain;
    std::vector<int> current(pi1.degrees().begin(), pi1.degrees().end());
    std::vector<int> target(pi2.degrees().begin(), pi2.degrees().end());
    chain.steps.push_back(current);
    while (current != target) {
        // First differing position is below target (prefix sums), the last
        // position above target exists and sits further right; moving one
        // unit between them keeps the sequence non-increasing and positive.
        int j = 0;
        while (current[static_cast<size_t>(j)] == target[static_cast<size_t>(j)]) ++j;
        int k = static_cast<int>(current.size()) - 1;
        while (current[static_cast<size_t>(k)] <= target[static_cast<size_t>(k)]) --k;
        ++current[static_cast<size_t>(j)];
        --current[static_cast<size_t>(k)];
        chain.steps.push_back(current);
        chain.step_edits.emplace_back(j, k);
        DegreeSequence check(current); // every intermediate is a valid tree sequence
        (void)check;
    }
    return chain;
}

GreedyEccComparison compare_greedy_ecc(const DegreeSequence& pi1, const DegreeSequence& pi2) {
    GreedyEccComparison out;
    out.chain = refinement_chain(pi1, pi2);
    for (const auto& step : out.chain.steps) {
        RootedTree greedy = greedy_tree(DegreeSequence(step));
        out.chain_ecc.push_back(ecc_profile(greedy.tree).total);
    }
    out.ecc_from = out.chain_ecc.front();
    out.ecc_to = out.chain_ecc.back();
    for (size_t i = 0; i + 1 < out.chain_ecc.size(); ++i)
        if (out.chain_ecc[i] < out.chain_ecc[i + 1])
            fail(Errc::monotonicity_violation,
                 "greedy-tree total eccentricity increased along a refinement step");
    return out;
}

std::string to_json(const GreedyEccComparison& comparison) {
    nlohmann::ordered_json doc;
    doc["steps"] = comparison.chain.steps;
    auto& edits = doc["edits"] = nlohmann::ordered_json::array();
    for (auto [j, k] : comparison.chain.step_edits) edits.push_back({j, k});
    doc["ecc"] = comparison.chain_ecc;
    return doc.dump();
}

} // namespace ecc
