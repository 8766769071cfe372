#pragma once

#include <optional>
#include <vector>

#include "ecctree/tree.hpp"

namespace ecc {

// A constructed extremal tree together with the vertices playing the roles
// named by the ratio under study (u, w leaves; v a center vertex).
struct ExtremalWitness {
    Tree tree;
    std::optional<Vertex> u;
    std::optional<Vertex> w;
    std::optional<Vertex> v;
};

Tree star(int n); // n >= 1; vertex 0 is the center
Tree path(int n); // n >= 1; vertices in path order

// Longest path on 2x vertices, the other n-2x vertices pendant on its two
// middle vertices (balanced, excess on the lower-index side). Minimizes
// total/center for the theorem-optimal x. Requires n >= 4, 2 <= x, 2x <= n.
ExtremalWitness extremal_min_total_over_center(int n, int x);

// Longest path on 2x-1 vertices, leaf u pendant on the middle vertex, the
// remaining n-2x vertices pendant on the second and second-to-last path
// vertices (balanced). Maximizes total/leaf. Requires n >= 8, 3 <= x, 2x <= n.
ExtremalWitness extremal_max_total_over_leaf(int n, int x);

// Path of even length x with u an endpoint and the other n-x-1 vertices
// pendant on the middle path vertex. Minimizes total/leaf. Requires
// n >= 5, x even, 2 <= x <= n-1.
ExtremalWitness extremal_min_total_over_leaf(int n, int x);

// Minimizers of leaf/center. Variant 1 (any n >= 5): longest path on n-1
// vertices with u pendant on a path center. Variant 2 (even n only): path
// on n-2 vertices, u pendant on a path center, w pendant on internal path
// position `attach` (1-based, 2..n-3).
ExtremalWitness extremal_min_leaf_over_center(int n, int variant,
                                              std::optional<int> attach = {});

// Maximizer of leaf/leaf. Even n: path on n-1 vertices (u an endpoint)
// with w pendant on the (n/2)-th path vertex. Odd n: path on n-2 vertices,
// w pendant on the middle, one more leaf pendant on internal position
// `attach` (1-based, 2..n-3; required for odd n, rejected for even n).
ExtremalWitness extremal_max_leaf_over_leaf(int n, std::optional<int> attach = {});

// Caterpillar with spine degrees assigned so that positions farther from
// the spine middle carry larger degrees (ties broken by position index);
// k = 1 degenerates to the star. Maximizes Ecc in its degree-sequence
// class. Requires n >= 3.
Tree greedy_caterpillar(const DegreeSequence& ds);

// Every caterpillar arising from a valid assignment of the internal
// degrees to spine positions (larger eccentricity never gets a smaller
// degree). All of them share the same Ecc; the canonical build above is
// one of them. Intended for small k (enumeration is k! in the worst case).
std::vector<Tree> greedy_caterpillar_assignments(const DegreeSequence& ds, int max_k = 8);

// The unique rooted tree whose level degrees, read left to right, are
// non-increasing and whose levels are wired in order: each parent takes
// the next down-degree-many unconnected vertices of the next level.
RootedTree level_greedy(const LevelDegreeSequence& lds);

// Level-greedy tree for the level-degree sequence that always places the
// largest remaining degrees closest to the root. Minimizes Ecc in its
// degree-sequence class.
RootedTree greedy_tree(const DegreeSequence& ds);

} // namespace ecc
