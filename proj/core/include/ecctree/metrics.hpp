#pragma once

#include <optional>
#include <vector>

#include "ecctree/rational.hpp"
#include "ecctree/tree.hpp"

namespace ecc {

struct EccProfile {
    std::vector<int> ecc;         // per-vertex eccentricity
    long long total = 0;          // sum of eccentricities
    int radius = 0;
    int diameter = 0;
    std::vector<Vertex> center;   // ascending, size 1 or 2
    std::vector<Vertex> leaves;   // ascending
};

// Breadth-first distances; dist[v] == 0.
std::vector<int> distances_from(const Tree& tree, Vertex v);

// Ground-truth profile from n independent breadth-first sweeps.
EccProfile ecc_profile(const Tree& tree);

// Three-sweep shortcut: ecc(v) = max(d(v,a), d(v,b)) for a diametral pair
// (a, b). Agrees with the n-sweep profile; the tests compare them.
std::vector<int> eccentricities(const Tree& tree);

// Total eccentricity of the path with y edges:
// (3/4)y^2 + y for even y, (3/4)y^2 + y + 1/4 for odd y.
long long path_total_ecc(long long y);

enum class RatioKind {
    total_over_center, // Ecc(T)/ecc(v), v in the center (u must be a center vertex)
    total_over_leaf,   // Ecc(T)/ecc(u), u a leaf
    leaf_over_center,  // ecc(u)/ecc(v), u a leaf, v picked from the center
    leaf_over_leaf,    // ecc(u)/ecc(w), both leaves
};

// Exact value of the requested ratio. The center vertex for
// leaf_over_center is chosen internally (smallest index; both centers
// share the radius, so the value does not depend on the choice).
Rational ratio(RatioKind kind, const Tree& tree, Vertex u, std::optional<Vertex> w = {});

} // namespace ecc
