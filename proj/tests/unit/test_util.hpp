#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ecctree/errors.hpp"
#include "ecctree/tree.hpp"

namespace ecc::test {

// Error code raised by f, or monotonicity_violation if nothing was thrown
// (callers always expect a throw).
template <typename F>
Errc code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::monotonicity_violation;
}

// Random tree by uniform attachment. Not uniform over labeled trees, which
// is fine for invariance properties.
inline Tree random_tree(std::mt19937& rng, int n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return Tree::from_edges(n, edges);
}

inline Tree random_relabeling(std::mt19937& rng, const Tree& tree) {
    std::vector<Vertex> perm(static_cast<size_t>(tree.n()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return tree.relabeled(perm);
}

// Random non-increasing tree degree sequence of order n.
inline std::vector<int> random_degree_sequence(std::mt19937& rng, int n) {
    std::vector<int> degrees(static_cast<size_t>(n), 1);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int extra = 0; extra < n - 2; ++extra) ++degrees[static_cast<size_t>(pick(rng))];
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    return degrees;
}

} // namespace ecc::test
