#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecctree/errors.hpp"

namespace ecc {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Undirected tree on vertices 0..n-1. Immutable after construction;
// adjacency lists are kept sorted so every traversal is deterministic.
class Tree {
public:
    // Validates: exactly n-1 edges, indices in range, no duplicates or
    // self-loops, connected. Throws Error with the specific code otherwise.
    static Tree from_edges(int n, const std::vector<Edge>& edges);

    static Tree single_vertex() { return from_edges(1, {}); }

    int n() const { return n_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_[static_cast<size_t>(v)].data(), adj_[static_cast<size_t>(v)].size()};
    }

    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    // Degree-1 vertices, ascending.
    std::vector<Vertex> leaves() const;

    // Relabel vertices through the permutation perm (vertex v becomes perm[v]).
    Tree relabeled(const std::vector<Vertex>& perm) const;

private:
    Tree() = default;
    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

// Edge-list document: header line "n <count>", then one "u v" line per edge.
Tree parse_tree(std::string_view text);
// JSON form {"n": int, "edges": [[u,v], ...]}.
Tree parse_tree_json(std::string_view text);
// Accepts either representation (JSON when the first non-space byte is '{').
Tree parse_tree_auto(std::string_view text);

std::string format_tree(const Tree& tree);
std::string format_tree_json(const Tree& tree);

// Tree plus a distinguished root; parents and heights come from a
// breadth-first traversal, so sibling order follows vertex order.
struct RootedTree {
    explicit RootedTree(Tree t) : tree(std::move(t)) {}

    Tree tree;
    Vertex root = 0;
    std::vector<Vertex> parent;   // parent[root] == -1
    std::vector<int> height_of;   // height_of[root] == 0

    int n() const { return tree.n(); }
    int height() const;
    // Vertices grouped by height, each group ascending.
    std::vector<std::vector<Vertex>> levels() const;
};

RootedTree root_at(const Tree& tree, Vertex root);

// The two middle vertices of a maximum-length path: |result| is 1 or 2,
// two centers are adjacent. Independent of the eccentricity-based center
// in metrics; the two are compared in tests.
std::vector<Vertex> center_of(const Tree& tree);

// AHU encoding rooted at the center; for a two-vertex center the
// lexicographically smaller of the two rooted encodings. Equal strings
// iff trees are isomorphic.
std::string canonical_form(const Tree& tree);
std::string rooted_canonical_form(const Tree& tree, Vertex root);

// Non-increasing positive degrees with sum 2(n-1).
class DegreeSequence {
public:
    // Sorts a copy non-increasing, then validates.
    explicit DegreeSequence(std::vector<int> degrees);

    std::span<const int> degrees() const { return {degrees_.data(), degrees_.size()}; }
    int n() const { return static_cast<int>(degrees_.size()); }
    // Number of entries > 1.
    int internal_count() const;
    int operator[](int i) const { return degrees_[static_cast<size_t>(i)]; }

    std::string str() const; // "3,2,2,1,1,1"
    friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) {
        return a.degrees_ == b.degrees_;
    }

private:
    std::vector<int> degrees_;
};

DegreeSequence degree_sequence_of(const Tree& tree);

// Degree multisets per height level of a rooted tree. Levels are stored
// non-increasing. Validation: |L0| == 1, sum(L0) == |L1|, and
// sum over L_i of (d-1) == |L_{i+1}| for i >= 1 (absent levels empty);
// flattening all levels must give a valid DegreeSequence.
class LevelDegreeSequence {
public:
    explicit LevelDegreeSequence(std::vector<std::vector<int>> levels);

    const std::vector<std::vector<int>>& levels() const { return levels_; }
    int depth() const { return static_cast<int>(levels_.size()); }
    int vertex_count() const;
    DegreeSequence flattened() const;

    std::string str() const; // "3;5,3,2;3,3,1,1"
    friend bool operator==(const LevelDegreeSequence& a, const LevelDegreeSequence& b) {
        return a.levels_ == b.levels_;
    }
    friend bool operator<(const LevelDegreeSequence& a, const LevelDegreeSequence& b) {
        return a.levels_ < b.levels_;
    }

private:
    std::vector<std::vector<int>> levels_;
};

LevelDegreeSequence level_degree_sequence_of(const RootedTree& rooted);

} // namespace ecc
