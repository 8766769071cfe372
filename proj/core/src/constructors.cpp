#include "ecctree/constructors.hpp"

#include <algorithm>
#include <numeric>

#include "ecctree/metrics.hpp"

namespace ecc {

namespace {

void check_roles(const ExtremalWitness& w) {
    if (w.u && w.tree.degree(*w.u) != 1)
        fail(Errc::bad_parameter, "witness vertex u is not a leaf");
    if (w.w && w.tree.degree(*w.w) != 1)
        fail(Errc::bad_parameter, "witness vertex w is not a leaf");
    if (w.v) {
        EccProfile p = ecc_profile(w.tree);
        if (!std::binary_search(p.center.begin(), p.center.end(), *w.v))
            fail(Errc::bad_parameter, "witness vertex v is not a center vertex");
    }
}

} // namespace

Tree star(int n) {
    if (n < 1) fail(Errc::bad_parameter, "star needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Tree::from_edges(n, edges);
}

Tree path(int n) {
    if (n < 1) fail(Errc::bad_parameter, "path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Tree::from_edges(n, edges);
}

ExtremalWitness extremal_min_total_over_center(int n, int x) {
    if (n < 4) fail(Errc::bad_parameter, "needs n >= 4");
    if (x < 2 || 2 * x > n)
        fail(Errc::bad_parameter, "path parameter x must satisfy 2 <= x and 2x <= n");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < 2 * x; ++v) edges.emplace_back(v, v + 1);
    // Centers of the 2x-vertex path are positions x-1 and x; pendants split
    // between them with the excess on the lower index.
    int extra = n - 2 * x;
    Vertex next = 2 * x;
    for (int j = 0; j < extra; ++j)
        edges.emplace_back(j < (extra + 1) / 2 ? x - 1 : x, next++);
    ExtremalWitness w{Tree::from_edges(n, edges), 2 * x - 1, 0, x - 1};
    check_roles(w);
    return w;
}

ExtremalWitness extremal_max_total_over_leaf(int n, int x) {
    if (n < 8) fail(Errc::bad_parameter, "needs n >= 8");
    if (x < 3 || 2 * x > n)
        fail(Errc::bad_parameter, "path parameter x must satisfy 3 <= x and 2x <= n");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < 2 * x - 1; ++v) edges.emplace_back(v, v + 1);
    Vertex u = 2 * x - 1;
    edges.emplace_back(x - 1, u); // u pendant on the middle vertex z_x
    int extra = n - 2 * x;
    Vertex next = 2 * x;
    for (int j = 0; j < extra; ++j)
        edges.emplace_back(j < (extra + 1) / 2 ? 1 : 2 * x - 3, next++);
    ExtremalWitness w{Tree::from_edges(n, edges), u, {}, {}};
    check_roles(w);
    return w;
}

ExtremalWitness extremal_min_total_over_leaf(int n, int x) {
    if (n < 5) fail(Errc::bad_parameter, "needs n >= 5");
    if (x % 2 != 0)
        fail(Errc::bad_parameter, "the equality family requires an even path length");
    if (x < 2 || x > n - 1)
        fail(Errc::bad_parameter, "path length x must satisfy 2 <= x <= n-1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 <= x; ++v) edges.emplace_back(v, v + 1);
    for (Vertex next = x + 1; next < n; ++next) edges.emplace_back(x / 2, next);
    ExtremalWitness w{Tree::from_edges(n, edges), 0, x, x / 2};
    check_roles(w);
    return w;
}

ExtremalWitness extremal_min_leaf_over_center(int n, int variant, std::optional<int> attach) {
    if (n < 5) fail(Errc::bad_parameter, "needs n >= 5");
    if (variant != 1 && variant != 2) fail(Errc::bad_parameter, "variant must be 1 or 2");
    if (variant == 1) {
        if (attach) fail(Errc::bad_parameter, "variant 1 takes no attachment index");
        int m = n - 1; // path vertices
        std::vector<Edge> edges;
        for (Vertex v = 0; v + 1 < m; ++v) edges.emplace_back(v, v + 1);
        Vertex c = (m - 1) / 2;
        edges.emplace_back(c, n - 1);
        ExtremalWitness w{Tree::from_edges(n, edges), n - 1, {}, c};
        check_roles(w);
        return w;
    }
    if (n % 2 != 0)
        fail(Errc::bad_parameter, "variant 2 exists only for even n");
    if (!attach) fail(Errc::bad_parameter, "variant 2 needs an attachment index");
    if (*attach < 2 || *attach > n - 3)
        fail(Errc::bad_parameter, "attachment index must lie in 2..n-3");
    int m = n - 2;
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < m; ++v) edges.emplace_back(v, v + 1);
    Vertex c = (m - 1) / 2;
    edges.emplace_back(c, n - 2);           // u on a path center
    edges.emplace_back(*attach - 1, n - 1); // w on the 1-based internal position
    ExtremalWitness w{Tree::from_edges(n, edges), n - 2, n - 1, c};
    check_roles(w);
    return w;
}

ExtremalWitness extremal_max_leaf_over_leaf(int n, std::optional<int> attach) {
    if (n < 4) fail(Errc::bad_parameter, "needs n >= 4");
    if (n % 2 == 0) {
        if (attach) fail(Errc::bad_parameter, "even n takes no attachment index");
        int m = n - 1;
        std::vector<Edge> edges;
        for (Vertex v = 0; v + 1 < m; ++v) edges.emplace_back(v, v + 1);
        edges.emplace_back(n / 2 - 1, n - 1); // w on z_{n/2}
        ExtremalWitness w{Tree::from_edges(n, edges), 0, n - 1, {}};
        check_roles(w);
        return w;
    }
    if (!attach) fail(Errc::bad_parameter, "odd n needs an attachment index");
    if (*attach < 2 || *attach > n - 3)
        fail(Errc::bad_parameter, "attachment index must lie in 2..n-3");
    int m = n - 2;
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < m; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back((n - 1) / 2 - 1, n - 2); // w on z_{(n-1)/2}
    edges.emplace_back(*attach - 1, n - 1);     // extra leaf on the internal position
    ExtremalWitness w{Tree::from_edges(n, edges), 0, n - 2, {}};
    check_roles(w);
    return w;
}

namespace {

// Eccentricity of 0-based position i inside a path on k vertices.
int spine_ecc(int i, int k) { return std::max(i, k - 1 - i); }

// Spine positions ordered by (eccentricity desc, index asc); assigning the
// non-increasing internal degrees in this order realizes the definition
// deterministically.
std::vector<int> canonical_spine_order(int k) {
    std::vector<int> order(static_cast<size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return spine_ecc(a, k) > spine_ecc(b, k);
    });
    return order;
}

Tree caterpillar_from_spine_degrees(const DegreeSequence& ds, const std::vector<int>& phi) {
    int n = ds.n();
    int k = static_cast<int>(phi.size());
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
    Vertex next = k;
    for (int i = 0; i < k; ++i) {
        int pendants = phi[static_cast<size_t>(i)] - ((i == 0 || i == k - 1) ? 1 : 2);
        if (k == 1) pendants = phi[0];
        for (int j = 0; j < pendants; ++j) edges.emplace_back(i, next++);
    }
    if (next != n) fail(Errc::invalid_degree_sequence, "degree sequence does not fit a caterpillar");
    return Tree::from_edges(n, edges);
}

} // namespace

Tree greedy_caterpillar(const DegreeSequence& ds) {
    if (ds.n() < 3) fail(Errc::bad_parameter, "greedy caterpillar needs n >= 3");
    int k = ds.internal_count();
    if (k == 1) return star(ds.n()); // single spine vertex carries every pendant
    std::vector<int> phi(static_cast<size_t>(k));
    std::vector<int> order = canonical_spine_order(k);
    for (int r = 0; r < k; ++r) phi[static_cast<size_t>(order[static_cast<size_t>(r)])] = ds[r];
    return caterpillar_from_spine_degrees(ds, phi);
}

std::vector<Tree> greedy_caterpillar_assignments(const DegreeSequence& ds, int max_k) {
    if (ds.n() < 3) fail(Errc::bad_parameter, "greedy caterpillar needs n >= 3");
    int k = ds.internal_count();
    if (k > max_k) fail(Errc::cap_exceeded, "spine too long for assignment enumeration");
    if (k == 1) return {star(ds.n())};
    std::vector<int> internal(ds.degrees().begin(), ds.degrees().begin() + k);
    std::sort(internal.begin(), internal.end()); // start of next_permutation cycle
    std::vector<Tree> out;
    do {
        bool valid = true;
        for (int i = 0; i < k && valid; ++i)
            for (int j = 0; j < k && valid; ++j)
                if (spine_ecc(i, k) > spine_ecc(j, k) &&
                    internal[static_cast<size_t>(i)] < internal[static_cast<size_t>(j)])
                    valid = false;
        if (valid) out.push_back(caterpillar_from_spine_degrees(ds, internal));
    } while (std::next_permutation(internal.begin(), internal.end()));
    return out;
}

RootedTree level_greedy(const LevelDegreeSequence& lds) {
    const auto& levels = lds.levels();
    int n = lds.vertex_count();
    // Vertices are numbered level by level, left to right.
    std::vector<int> level_start(levels.size() + 1, 0);
    for (size_t i = 0; i < levels.size(); ++i)
        level_start[i + 1] = level_start[i] + static_cast<int>(levels[i].size());
    std::vector<Edge> edges;
    for (size_t i = 0; i + 1 < levels.size(); ++i) {
        Vertex child = level_start[i + 1];
        for (size_t j = 0; j < levels[i].size(); ++j) {
            Vertex parent = level_start[i] + static_cast<int>(j);
            int down = levels[i][j] - (i == 0 ? 0 : 1);
            for (int c = 0; c < down; ++c) edges.emplace_back(parent, child++);
        }
    }
    RootedTree r = root_at(Tree::from_edges(n, edges), 0);
    return r;
}

RootedTree greedy_tree(const DegreeSequence& ds) {
    std::vector<int> sorted(ds.degrees().begin(), ds.degrees().end()); // non-increasing
    std::vector<std::vector<int>> levels;
    size_t consumed = 0;
    long long slots = 1; // the root
    while (slots > 0) {
        if (consumed + static_cast<size_t>(slots) > sorted.size())
            fail(Errc::invalid_degree_sequence, "level sizes overrun the degree sequence");
        std::vector<int> level(sorted.begin() + static_cast<long>(consumed),
                               sorted.begin() + static_cast<long>(consumed) + slots);
        consumed += static_cast<size_t>(slots);
        slots = 0;
        for (int d : level) slots += levels.empty() ? d : d - 1;
        levels.push_back(std::move(level));
    }
    if (consumed != sorted.size())
        fail(Errc::invalid_degree_sequence, "degree sequence leaves unplaced vertices");
    return level_greedy(LevelDegreeSequence(std::move(levels)));
}

} // namespace ecc
