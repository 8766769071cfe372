#include "ecctree/metrics.hpp"

#include <algorithm>

namespace ecc {

namespace {

// BFS into a caller-provided buffer so profile sweeps reuse storage.
void bfs_into(const Tree& tree, Vertex start, std::vector<int>& dist, std::vector<Vertex>& queue) {
    dist.assign(static_cast<size_t>(tree.n()), -1);
    queue.clear();
    queue.push_back(start);
    dist[static_cast<size_t>(start)] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex w : tree.neighbors(v))
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
}

EccProfile profile_from_ecc(const Tree& tree, std::vector<int> ecc) {
    EccProfile p;
    p.ecc = std::move(ecc);
    p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
    p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
    p.total = 0;
    for (Vertex v = 0; v < tree.n(); ++v) {
        p.total += p.ecc[static_cast<size_t>(v)];
        if (p.ecc[static_cast<size_t>(v)] == p.radius) p.center.push_back(v);
        if (tree.degree(v) == 1) p.leaves.push_back(v);
    }
    return p;
}

} // namespace

std::vector<int> distances_from(const Tree& tree, Vertex v) {
    if (v < 0 || v >= tree.n())
        fail(Errc::index_out_of_range, "vertex " + std::to_string(v) + " out of range");
    std::vector<int> dist;
    std::vector<Vertex> queue;
    bfs_into(tree, v, dist, queue);
    return dist;
}

EccProfile ecc_profile(const Tree& tree) {
    std::vector<int> ecc(static_cast<size_t>(tree.n()));
    std::vector<int> dist;
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < tree.n(); ++v) {
        bfs_into(tree, v, dist, queue);
        ecc[static_cast<size_t>(v)] = *std::max_element(dist.begin(), dist.end());
    }
    return profile_from_ecc(tree, std::move(ecc));
}

std::vector<int> eccentricities(const Tree& tree) {
    std::vector<int> dist;
    std::vector<Vertex> queue;
    bfs_into(tree, 0, dist, queue);
    Vertex a = static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    bfs_into(tree, a, dist, queue);
    Vertex b = static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    std::vector<int> from_a = dist;
    bfs_into(tree, b, dist, queue);
    std::vector<int> ecc(static_cast<size_t>(tree.n()));
    for (Vertex v = 0; v < tree.n(); ++v)
        ecc[static_cast<size_t>(v)] =
            std::max(from_a[static_cast<size_t>(v)], dist[static_cast<size_t>(v)]);
    return ecc;
}

long long path_total_ecc(long long y) {
    if (y < 0) fail(Errc::bad_parameter, "edge count must be non-negative");
    // 3y^2/4 + y, with the odd case's +1/4 folded in: (3y^2+1)/4 + y.
    if (y % 2 == 0) return 3 * y * y / 4 + y;
    return (3 * y * y + 1) / 4 + y;
}

Rational ratio(RatioKind kind, const Tree& tree, Vertex u, std::optional<Vertex> w) {
    if (tree.n() < 2) fail(Errc::bad_parameter, "ratios need n >= 2");
    if (u < 0 || u >= tree.n())
        fail(Errc::index_out_of_range, "vertex " + std::to_string(u) + " out of range");
    EccProfile p = ecc_profile(tree);
    auto is_center = [&](Vertex v) {
        return std::binary_search(p.center.begin(), p.center.end(), v);
    };
    auto require_leaf = [&](Vertex v) {
        if (tree.degree(v) != 1)
            fail(Errc::bad_parameter, "vertex " + std::to_string(v) + " is not a leaf");
    };
    switch (kind) {
    case RatioKind::total_over_center:
        if (!is_center(u))
            fail(Errc::bad_parameter, "vertex " + std::to_string(u) + " is not a center vertex");
        return Rational(BigInt(p.total), BigInt(p.radius));
    case RatioKind::total_over_leaf:
        require_leaf(u);
        return Rational(BigInt(p.total), BigInt(p.ecc[static_cast<size_t>(u)]));
    case RatioKind::leaf_over_center:
        require_leaf(u);
        return Rational(BigInt(p.ecc[static_cast<size_t>(u)]), BigInt(p.radius));
    case RatioKind::leaf_over_leaf: {
        if (!w) fail(Errc::bad_parameter, "leaf/leaf ratio needs a second vertex");
        if (*w < 0 || *w >= tree.n())
            fail(Errc::index_out_of_range, "vertex " + std::to_string(*w) + " out of range");
        require_leaf(u);
        require_leaf(*w);
        return Rational(BigInt(p.ecc[static_cast<size_t>(u)]),
                        BigInt(p.ecc[static_cast<size_t>(*w)]));
    }
    }
    fail(Errc::bad_parameter, "unknown ratio kind");
}

} // namespace ecc
