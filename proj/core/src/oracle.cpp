#include "ecctree/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "ecctree/bounds.hpp"
#include "ecctree/constructors.hpp"
#include "ecctree/majorization.hpp"
#include "ecctree/metrics.hpp"

namespace ecc {

namespace {

// ---------------------------------------------------------------------
// Flat tree scratch for the hot enumeration loops. Any class we scan
// exhaustively has small order, so fixed-size arrays suffice and nothing
// allocates per tree.
// ---------------------------------------------------------------------

constexpr int kMaxFlatOrder = 16;

struct FlatTree {
    int n = 0;
    int deg[kMaxFlatOrder];
    int adj[kMaxFlatOrder][kMaxFlatOrder];
};

// Linear-time Pruefer decode; seq has length n-2.
void decode_prufer(const int* seq, int len, FlatTree& t) {
    int n = len + 2;
    t.n = n;
    int count[kMaxFlatOrder];
    for (int v = 0; v < n; ++v) {
        count[v] = 1;
        t.deg[v] = 0;
    }
    for (int j = 0; j < len; ++j) ++count[seq[j]];
    auto add_edge = [&t](int a, int b) {
        t.adj[a][t.deg[a]++] = b;
        t.adj[b][t.deg[b]++] = a;
    };
    int ptr = 0;
    while (count[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int j = 0; j < len; ++j) {
        int s = seq[j];
        add_edge(leaf, s);
        if (--count[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (count[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    add_edge(leaf, n - 1);
}

void single_vertex_flat(FlatTree& t) {
    t.n = 1;
    t.deg[0] = 0;
}

// BFS distances; returns the farthest vertex (lowest index on ties).
int bfs_flat(const FlatTree& t, int start, int* dist) {
    int queue[kMaxFlatOrder];
    for (int v = 0; v < t.n; ++v) dist[v] = -1;
    queue[0] = start;
    dist[start] = 0;
    int head = 0, tail = 1;
    while (head < tail) {
        int v = queue[head++];
        for (int j = 0; j < t.deg[v]; ++j) {
            int w = t.adj[v][j];
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue[tail++] = w;
            }
        }
    }
    int best = 0;
    for (int v = 1; v < t.n; ++v)
        if (dist[v] > dist[best]) best = v;
    return best;
}

// ecc(v) = max distance to either endpoint of a diametral pair.
void ecc_flat(const FlatTree& t, int* ecc) {
    int da[kMaxFlatOrder], db[kMaxFlatOrder];
    int a = bfs_flat(t, 0, da);
    int b = bfs_flat(t, a, da);
    bfs_flat(t, b, db);
    for (int v = 0; v < t.n; ++v) ecc[v] = std::max(da[v], db[v]);
}

std::vector<Edge> flat_edges(const FlatTree& t) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(t.n > 0 ? t.n - 1 : 0));
    for (int v = 0; v < t.n; ++v)
        for (int j = 0; j < t.deg[v]; ++j)
            if (v < t.adj[v][j]) edges.emplace_back(v, t.adj[v][j]);
    return edges;
}

std::string flat_rooted_canonical(const FlatTree& t, int root) {
    int order[kMaxFlatOrder], parent[kMaxFlatOrder], dist[kMaxFlatOrder];
    for (int v = 0; v < t.n; ++v) dist[v] = -1;
    order[0] = root;
    parent[root] = -1;
    dist[root] = 0;
    int head = 0, tail = 1;
    while (head < tail) {
        int v = order[head++];
        for (int j = 0; j < t.deg[v]; ++j) {
            int w = t.adj[v][j];
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                order[tail++] = w;
            }
        }
    }
    std::string code[kMaxFlatOrder];
    std::string children[kMaxFlatOrder];
    for (int i = t.n - 1; i >= 0; --i) {
        int v = order[i];
        int child_count = 0;
        for (int j = 0; j < t.deg[v]; ++j) {
            int w = t.adj[v][j];
            if (w != parent[v]) children[child_count++] = code[w];
        }
        std::sort(children, children + child_count);
        std::string s = "(";
        for (int j = 0; j < child_count; ++j) s += children[j];
        s += ")";
        code[v] = std::move(s);
    }
    return code[root];
}

// Same encoding as canonical_form(): AHU rooted at the center, smaller of
// the two encodings for a two-vertex center.
std::string flat_canonical(const FlatTree& t, const int* ecc) {
    int rad = ecc[0];
    for (int v = 1; v < t.n; ++v) rad = std::min(rad, ecc[v]);
    int c1 = -1, c2 = -1;
    for (int v = 0; v < t.n; ++v)
        if (ecc[v] == rad) (c1 < 0 ? c1 : c2) = v;
    std::string s = flat_rooted_canonical(t, c1);
    if (c2 >= 0) {
        std::string other = flat_rooted_canonical(t, c2);
        if (other < s) s = std::move(other);
    }
    return s;
}

// ---------------------------------------------------------------------
// Objective evaluation and scan accumulation
// ---------------------------------------------------------------------

struct Frac {
    long long num = 0;
    long long den = 1;
};

int frac_cmp(const Frac& a, const Frac& b) {
    long long l = a.num * b.den, r = b.num * a.den;
    return l < r ? -1 : (l > r ? 1 : 0);
}

Frac eval_objective(const FlatTree& t, const int* ecc, const Objective& obj) {
    long long total = 0;
    int rad = INT_MAX, diam = -1, min_leaf = INT_MAX;
    for (int v = 0; v < t.n; ++v) {
        total += ecc[v];
        rad = std::min(rad, ecc[v]);
        diam = std::max(diam, ecc[v]);
        if (t.deg[v] == 1) min_leaf = std::min(min_leaf, ecc[v]);
    }
    switch (obj.kind) {
    case Objective::Kind::total_ecc: return {total, 1};
    case Objective::Kind::total_over_center: return {total, rad};
    case Objective::Kind::total_over_leaf_min: return {total, diam};
    case Objective::Kind::total_over_leaf_max: return {total, min_leaf};
    case Objective::Kind::leaf_over_center_min: return {min_leaf, rad};
    case Objective::Kind::leaf_over_center_max: return {diam, rad};
    case Objective::Kind::leaf_over_leaf_max: return {diam, min_leaf};
    case Objective::Kind::count_ecc_at_most: {
        long long c = 0;
        for (int v = 0; v < t.n; ++v)
            if (ecc[v] <= obj.ell) ++c;
        return {c, 1};
    }
    }
    fail(Errc::bad_parameter, "unknown objective");
}

struct ScanFlags {
    bool iso = false;
    bool min_wit = true;
    bool max_wit = true;
};

struct ScanAccum {
    long long labeled = 0;
    bool any = false;
    Frac min, max;
    std::set<std::string> min_wit, max_wit, iso;
};

void accum_tree(const FlatTree& t, const Objective& obj, const ScanFlags& flags, ScanAccum& acc) {
    int ecc[kMaxFlatOrder];
    ecc_flat(t, ecc);
    Frac value = eval_objective(t, ecc, obj);
    ++acc.labeled;
    std::string canon;
    bool have_canon = false;
    auto the_canon = [&]() -> std::string& {
        if (!have_canon) {
            canon = flat_canonical(t, ecc);
            have_canon = true;
        }
        return canon;
    };
    if (flags.iso) acc.iso.insert(the_canon());
    if (!acc.any) {
        acc.any = true;
        acc.min = acc.max = value;
        if (flags.min_wit) acc.min_wit.insert(the_canon());
        if (flags.max_wit) acc.max_wit.insert(the_canon());
        return;
    }
    int c = frac_cmp(value, acc.min);
    if (c < 0) {
        acc.min = value;
        if (flags.min_wit) {
            acc.min_wit.clear();
            acc.min_wit.insert(the_canon());
        }
    } else if (c == 0 && flags.min_wit) {
        acc.min_wit.insert(the_canon());
    }
    c = frac_cmp(value, acc.max);
    if (c > 0) {
        acc.max = value;
        if (flags.max_wit) {
            acc.max_wit.clear();
            acc.max_wit.insert(the_canon());
        }
    } else if (c == 0 && flags.max_wit) {
        acc.max_wit.insert(the_canon());
    }
}

void merge_accum(ScanAccum& into, ScanAccum&& from) {
    into.labeled += from.labeled;
    into.iso.merge(from.iso);
    if (!from.any) return;
    if (!into.any) {
        into.any = true;
        into.min = from.min;
        into.max = from.max;
        into.min_wit = std::move(from.min_wit);
        into.max_wit = std::move(from.max_wit);
        return;
    }
    int c = frac_cmp(from.min, into.min);
    if (c < 0) {
        into.min = from.min;
        into.min_wit = std::move(from.min_wit);
    } else if (c == 0) {
        into.min_wit.merge(from.min_wit);
    }
    c = frac_cmp(from.max, into.max);
    if (c > 0) {
        into.max = from.max;
        into.max_wit = std::move(from.max_wit);
    } else if (c == 0) {
        into.max_wit.merge(from.max_wit);
    }
}

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

void scan_order_range(int n, long long lo, long long hi, const Objective& obj,
                      const ScanFlags& flags, ScanAccum& acc) {
    int len = n - 2;
    int seq[kMaxFlatOrder] = {0};
    long long rem = lo;
    for (int j = len - 1; j >= 0; --j) {
        seq[j] = static_cast<int>(rem % n);
        rem /= n;
    }
    FlatTree t;
    for (long long idx = lo; idx < hi; ++idx) {
        decode_prufer(seq, len, t);
        accum_tree(t, obj, flags, acc);
        for (int j = len - 1; j >= 0; --j) {
            if (++seq[j] < n) break;
            seq[j] = 0;
        }
    }
}

ScanAccum scan_all_of_order(int n, const Objective& obj, const ScanFlags& flags,
                            const EnumerationCaps& caps, int jobs) {
    if (n < 1) fail(Errc::bad_parameter, "order must be positive");
    if (n > caps.max_order || n > kMaxFlatOrder)
        fail(Errc::cap_exceeded, "order " + std::to_string(n) + " above enumeration cap " +
                                     std::to_string(std::min(caps.max_order, kMaxFlatOrder)));
    ScanAccum acc;
    if (n == 1) {
        FlatTree t;
        single_vertex_flat(t);
        accum_tree(t, obj, flags, acc);
        return acc;
    }
    long long total = count_labeled_trees(n);
    int workers = static_cast<int>(std::min<long long>(resolve_jobs(jobs), total));
    std::vector<ScanAccum> parts(static_cast<size_t>(workers));
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        long long lo = total * w / workers;
        long long hi = total * (w + 1) / workers;
        threads.emplace_back(
            [&, w, lo, hi] { scan_order_range(n, lo, hi, obj, flags, parts[static_cast<size_t>(w)]); });
    }
    for (auto& th : threads) th.join();
    for (auto& part : parts) merge_accum(acc, std::move(part));
    return acc;
}

// Pruefer multiset for a degree-class scan: label i repeated ds[i]-1 times,
// ascending, ready for next_permutation cycling.
std::vector<int> degree_class_seed(const DegreeSequence& ds) {
    std::vector<int> seq;
    for (int i = 0; i < ds.n(); ++i)
        for (int j = 1; j < ds[i]; ++j) seq.push_back(i);
    return seq;
}

ScanAccum scan_degree_class(const DegreeSequence& ds, const Objective& obj,
                            const ScanFlags& flags, const EnumerationCaps& caps) {
    long long count = count_trees_with_degree_sequence(ds);
    if (count > caps.max_class_size)
        fail(Errc::cap_exceeded, "degree-sequence class larger than cap");
    if (ds.n() > kMaxFlatOrder)
        fail(Errc::cap_exceeded, "degree-sequence class order too large to scan");
    std::vector<int> seq = degree_class_seed(ds);
    int len = static_cast<int>(seq.size());
    FlatTree t;
    ScanAccum acc;
    do {
        decode_prufer(seq.data(), len, t);
        accum_tree(t, obj, flags, acc);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return acc;
}

// Level-class enumeration works on real Tree objects (orders can exceed the
// flat scratch size); classes are small by construction.
struct LevelClassEnumeration {
    std::vector<RootedTree> classes; // ordered by rooted canonical form
    long long combos_scanned = 0;
};

LevelClassEnumeration enumerate_level_classes(const LevelDegreeSequence& lds,
                                              const EnumerationCaps& caps) {
    const auto& levels = lds.levels();
    int depth = lds.depth();
    int n = lds.vertex_count();
    std::vector<int> level_start(static_cast<size_t>(depth) + 1, 0);
    for (int i = 0; i < depth; ++i)
        level_start[static_cast<size_t>(i) + 1] =
            level_start[static_cast<size_t>(i)] + static_cast<int>(levels[static_cast<size_t>(i)].size());

    std::vector<int> degree(static_cast<size_t>(n), 0);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    degree[0] = levels[0][0];

    std::map<std::string, RootedTree> classes;
    LevelClassEnumeration out;

    // match_children assigns each vertex of level i to a parent in level
    // i-1 with free capacity, then hands over to the next level.
    std::function<void(int)> process_level = [&](int i) {
        if (i == depth) {
            ++out.combos_scanned;
            if (out.combos_scanned > caps.max_class_size)
                fail(Errc::cap_exceeded, "level-degree class larger than cap");
            std::vector<Edge> edges;
            for (Vertex v = 1; v < n; ++v) edges.emplace_back(parent[static_cast<size_t>(v)], v);
            Tree tree = Tree::from_edges(n, edges);
            std::string key = rooted_canonical_form(tree, 0);
            if (!classes.count(key)) classes.emplace(key, root_at(tree, 0));
            return;
        }
        int first = level_start[static_cast<size_t>(i)];
        int size = static_cast<int>(levels[static_cast<size_t>(i)].size());
        int parent_first = level_start[static_cast<size_t>(i - 1)];
        int parent_count = first - parent_first;

        std::vector<int> assignment(levels[static_cast<size_t>(i)]);
        std::sort(assignment.begin(), assignment.end());
        do {
            for (int j = 0; j < size; ++j) degree[static_cast<size_t>(first + j)] = assignment[static_cast<size_t>(j)];
            std::vector<int> capacity(static_cast<size_t>(parent_count));
            for (int p = 0; p < parent_count; ++p)
                capacity[static_cast<size_t>(p)] =
                    degree[static_cast<size_t>(parent_first + p)] - (i == 1 ? 0 : 1);
            std::function<void(int)> match = [&](int j) {
                if (j == size) {
                    process_level(i + 1);
                    return;
                }
                for (int p = 0; p < parent_count; ++p) {
                    if (capacity[static_cast<size_t>(p)] == 0) continue;
                    --capacity[static_cast<size_t>(p)];
                    parent[static_cast<size_t>(first + j)] = parent_first + p;
                    match(j + 1);
                    ++capacity[static_cast<size_t>(p)];
                }
            };
            match(0);
        } while (std::next_permutation(assignment.begin(), assignment.end()));
    };

    if (n == 1) {
        // not reachable: LevelDegreeSequence validation rejects n=1
        fail(Errc::invalid_level_sequence, "single-vertex level sequence");
    }
    process_level(1);
    for (auto& [key, rooted] : classes) out.classes.push_back(std::move(rooted));
    return out;
}

ScanAccum scan_level_class(const LevelDegreeSequence& lds, const Objective& obj,
                           const ScanFlags& flags, const EnumerationCaps& caps,
                           std::vector<RootedTree>* classes_out = nullptr) {
    LevelClassEnumeration enumeration = enumerate_level_classes(lds, caps);
    ScanAccum acc;
    acc.labeled = enumeration.combos_scanned;
    for (const RootedTree& rooted : enumeration.classes) {
        std::vector<int> ecc = eccentricities(rooted.tree);
        long long total = 0;
        int rad = INT_MAX, diam = -1, min_leaf = INT_MAX;
        for (Vertex v = 0; v < rooted.n(); ++v) {
            total += ecc[static_cast<size_t>(v)];
            rad = std::min(rad, ecc[static_cast<size_t>(v)]);
            diam = std::max(diam, ecc[static_cast<size_t>(v)]);
            if (rooted.tree.degree(v) == 1)
                min_leaf = std::min(min_leaf, ecc[static_cast<size_t>(v)]);
        }
        Frac value;
        switch (obj.kind) {
        case Objective::Kind::total_ecc: value = {total, 1}; break;
        case Objective::Kind::total_over_center: value = {total, rad}; break;
        case Objective::Kind::total_over_leaf_min: value = {total, diam}; break;
        case Objective::Kind::total_over_leaf_max: value = {total, min_leaf}; break;
        case Objective::Kind::leaf_over_center_min: value = {min_leaf, rad}; break;
        case Objective::Kind::leaf_over_center_max: value = {diam, rad}; break;
        case Objective::Kind::leaf_over_leaf_max: value = {diam, min_leaf}; break;
        case Objective::Kind::count_ecc_at_most: {
            long long c = 0;
            for (Vertex v = 0; v < rooted.n(); ++v)
                if (ecc[static_cast<size_t>(v)] <= obj.ell) ++c;
            value = {c, 1};
            break;
        }
        }
        std::string canon = canonical_form(rooted.tree);
        if (flags.iso) acc.iso.insert(canon);
        if (!acc.any) {
            acc.any = true;
            acc.min = acc.max = value;
            if (flags.min_wit) acc.min_wit.insert(canon);
            if (flags.max_wit) acc.max_wit.insert(canon);
            continue;
        }
        int c = frac_cmp(value, acc.min);
        if (c < 0) {
            acc.min = value;
            if (flags.min_wit) {
                acc.min_wit.clear();
                acc.min_wit.insert(canon);
            }
        } else if (c == 0 && flags.min_wit) {
            acc.min_wit.insert(canon);
        }
        c = frac_cmp(value, acc.max);
        if (c > 0) {
            acc.max = value;
            if (flags.max_wit) {
                acc.max_wit.clear();
                acc.max_wit.insert(canon);
            }
        } else if (c == 0 && flags.max_wit) {
            acc.max_wit.insert(canon);
        }
    }
    if (classes_out) *classes_out = std::move(enumeration.classes);
    return acc;
}

bool needs_leaves(Objective::Kind kind) {
    switch (kind) {
    case Objective::Kind::total_over_leaf_min:
    case Objective::Kind::total_over_leaf_max:
    case Objective::Kind::leaf_over_leaf_max: return true;
    default: return false;
    }
}

bool needs_positive_radius(Objective::Kind kind) {
    switch (kind) {
    case Objective::Kind::total_over_center:
    case Objective::Kind::leaf_over_center_min:
    case Objective::Kind::leaf_over_center_max: return true;
    default: return false;
    }
}

} // namespace

// ---------------------------------------------------------------------
// Public enumeration API
// ---------------------------------------------------------------------

EnumerationCaps caps_from_env() {
    EnumerationCaps caps;
    if (const char* value = std::getenv("ECC_CAP")) {
        int parsed = std::atoi(value);
        if (parsed >= 1) caps.max_order = parsed;
    }
    return caps;
}

TreeClassSpec TreeClassSpec::all_of_order(int n) {
    TreeClassSpec spec;
    spec.kind = Kind::all_of_order;
    spec.n = n;
    return spec;
}

TreeClassSpec TreeClassSpec::degree_class(DegreeSequence sequence) {
    TreeClassSpec spec;
    spec.kind = Kind::degree_sequence;
    spec.n = sequence.n();
    spec.ds = std::move(sequence);
    return spec;
}

TreeClassSpec TreeClassSpec::level_class(LevelDegreeSequence sequence) {
    TreeClassSpec spec;
    spec.kind = Kind::level_degree_sequence;
    spec.n = sequence.vertex_count();
    spec.lds = std::move(sequence);
    return spec;
}

long long count_labeled_trees(int n) {
    if (n < 1) fail(Errc::bad_parameter, "order must be positive");
    if (n <= 2) return 1;
    long long result = 1;
    for (int j = 0; j < n - 2; ++j) result *= n;
    return result;
}

long long count_trees_with_degree_sequence(const DegreeSequence& ds) {
    // (n-2)! / prod (d_i - 1)! as a product of binomials, saturating well
    // above any usable cap.
    constexpr long long kSaturate = LLONG_MAX / 4;
    long long remaining = ds.n() - 2;
    long long result = 1;
    for (int i = 0; i < ds.n(); ++i) {
        int pick = ds[i] - 1;
        // binomial(remaining, pick)
        unsigned __int128 binom = 1;
        for (int j = 1; j <= pick; ++j) {
            binom = binom * static_cast<unsigned long long>(remaining - pick + j) /
                    static_cast<unsigned long long>(j);
            if (binom > static_cast<unsigned __int128>(kSaturate)) return kSaturate;
        }
        unsigned __int128 next = static_cast<unsigned __int128>(result) * binom;
        if (next > static_cast<unsigned __int128>(kSaturate)) return kSaturate;
        result = static_cast<long long>(next);
        remaining -= pick;
    }
    return result;
}

void for_each_labeled_tree(int n, const EnumerationCaps& caps,
                           const std::function<void(const Tree&)>& fn) {
    if (n < 1) fail(Errc::bad_parameter, "order must be positive");
    if (n > caps.max_order || n > kMaxFlatOrder)
        fail(Errc::cap_exceeded, "order " + std::to_string(n) + " above enumeration cap " +
                                     std::to_string(std::min(caps.max_order, kMaxFlatOrder)));
    if (n == 1) {
        fn(Tree::single_vertex());
        return;
    }
    int len = n - 2;
    int seq[kMaxFlatOrder] = {0};
    long long total = count_labeled_trees(n);
    FlatTree t;
    for (long long idx = 0; idx < total; ++idx) {
        decode_prufer(seq, len, t);
        fn(Tree::from_edges(n, flat_edges(t)));
        for (int j = len - 1; j >= 0; --j) {
            if (++seq[j] < n) break;
            seq[j] = 0;
        }
    }
}

void for_each_tree_with_degree_sequence(const DegreeSequence& ds, const EnumerationCaps& caps,
                                        const std::function<void(const Tree&)>& fn) {
    if (count_trees_with_degree_sequence(ds) > caps.max_class_size)
        fail(Errc::cap_exceeded, "degree-sequence class larger than cap");
    if (ds.n() > kMaxFlatOrder)
        fail(Errc::cap_exceeded, "degree-sequence class order too large to scan");
    std::vector<int> seq = degree_class_seed(ds);
    FlatTree t;
    do {
        decode_prufer(seq.data(), static_cast<int>(seq.size()), t);
        fn(Tree::from_edges(ds.n(), flat_edges(t)));
    } while (std::next_permutation(seq.begin(), seq.end()));
}

std::vector<RootedTree> enumerate_rooted_with_level_sequence(const LevelDegreeSequence& lds,
                                                             const EnumerationCaps& caps) {
    return enumerate_level_classes(lds, caps).classes;
}

std::vector<Tree> free_tree_representatives(int n, const EnumerationCaps& caps, int jobs) {
    if (n < 1) fail(Errc::bad_parameter, "order must be positive");
    if (n > caps.max_order || n > kMaxFlatOrder)
        fail(Errc::cap_exceeded, "order above enumeration cap");
    if (n == 1) {
        std::vector<Tree> out;
        out.push_back(Tree::single_vertex());
        return out;
    }
    long long total = count_labeled_trees(n);
    int workers = static_cast<int>(std::min<long long>(resolve_jobs(jobs), total));
    std::vector<std::map<std::string, std::vector<Edge>>> parts(static_cast<size_t>(workers));
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        long long lo = total * w / workers;
        long long hi = total * (w + 1) / workers;
        threads.emplace_back([&, w, lo, hi] {
            auto& mine = parts[static_cast<size_t>(w)];
            int len = n - 2;
            int seq[kMaxFlatOrder] = {0};
            long long rem = lo;
            for (int j = len - 1; j >= 0; --j) {
                seq[j] = static_cast<int>(rem % n);
                rem /= n;
            }
            FlatTree t;
            int ecc[kMaxFlatOrder];
            for (long long idx = lo; idx < hi; ++idx) {
                decode_prufer(seq, len, t);
                ecc_flat(t, ecc);
                std::string key = flat_canonical(t, ecc);
                if (!mine.count(key)) mine.emplace(std::move(key), flat_edges(t));
                for (int j = len - 1; j >= 0; --j) {
                    if (++seq[j] < n) break;
                    seq[j] = 0;
                }
            }
        });
    }
    for (auto& th : threads) th.join();
    std::map<std::string, std::vector<Edge>> merged;
    for (auto& part : parts)
        for (auto& [key, edges] : part) merged.emplace(key, std::move(edges));
    std::vector<Tree> out;
    out.reserve(merged.size());
    for (auto& [key, edges] : merged) out.push_back(Tree::from_edges(n, edges));
    return out;
}

std::vector<DegreeSequence> all_degree_sequences(int n) {
    if (n < 2) fail(Errc::bad_parameter, "degree sequences need n >= 2");
    std::vector<DegreeSequence> out;
    std::vector<int> current;
    std::function<void(int, int, int)> rec = [&](int remaining, int parts, int max_entry) {
        if (parts == 0) {
            if (remaining == 0) out.emplace_back(current);
            return;
        }
        if (remaining < parts || remaining > static_cast<long long>(parts) * max_entry) return;
        int hi = std::min(max_entry, remaining - (parts - 1));
        for (int d = hi; d >= 1; --d) {
            current.push_back(d);
            rec(remaining - d, parts - 1, d);
            current.pop_back();
        }
    };
    rec(2 * n - 2, n, n - 1);
    return out;
}

std::vector<LevelDegreeSequence> all_level_degree_sequences(int max_vertices) {
    if (max_vertices < 2) fail(Errc::bad_parameter, "need room for at least 2 vertices");
    std::vector<LevelDegreeSequence> out;
    std::vector<std::vector<int>> levels;

    // Extends `levels` with every possible next level of `slots` entries.
    std::function<void(int, int)> extend = [&](int used, int slots) {
        if (slots == 0) {
            out.emplace_back(levels);
            return;
        }
        if (used + slots > max_vertices) return;
        std::vector<int> level(static_cast<size_t>(slots), 0);
        int budget = max_vertices - used - slots; // room for the next level
        std::function<void(int, int, int)> fill = [&](int pos, int prev, int down_left) {
            if (pos == slots) {
                int next_slots = budget - down_left;
                levels.push_back(level);
                extend(used + slots, next_slots);
                levels.pop_back();
                return;
            }
            for (int d = std::min(prev, down_left + 1); d >= 1; --d) {
                level[static_cast<size_t>(pos)] = d;
                fill(pos + 1, d, down_left - (d - 1));
            }
        };
        fill(0, max_vertices, budget);
    };

    for (int root_degree = max_vertices - 1; root_degree >= 1; --root_degree) {
        levels.assign(1, {root_degree});
        extend(1, root_degree);
    }
    return out;
}

// ---------------------------------------------------------------------
// extremal_search
// ---------------------------------------------------------------------

SearchReport extremal_search(const TreeClassSpec& spec, const Objective& objective,
                             const SearchOptions& options) {
    if (spec.n < 2 &&
        (needs_leaves(objective.kind) || needs_positive_radius(objective.kind)))
        fail(Errc::bad_parameter, "ratio objectives need classes of order >= 2");
    if (objective.kind == Objective::Kind::count_ecc_at_most && objective.ell < 0)
        fail(Errc::bad_parameter, "count threshold must be non-negative");

    ScanFlags flags;
    flags.iso = options.count_iso;
    flags.min_wit = options.track_min_witnesses;
    flags.max_wit = options.track_max_witnesses;

    ScanAccum acc;
    switch (spec.kind) {
    case TreeClassSpec::Kind::all_of_order:
        acc = scan_all_of_order(spec.n, objective, flags, options.caps, options.jobs);
        break;
    case TreeClassSpec::Kind::degree_sequence:
        acc = scan_degree_class(*spec.ds, objective, flags, options.caps);
        break;
    case TreeClassSpec::Kind::level_degree_sequence:
        acc = scan_level_class(*spec.lds, objective, flags, options.caps);
        break;
    }
    if (!acc.any) fail(Errc::bad_parameter, "empty tree class");

    SearchReport report;
    report.class_size_labeled = acc.labeled;
    report.class_size_iso = flags.iso ? static_cast<long long>(acc.iso.size()) : -1;
    report.min_value = Rational::of(acc.min.num, acc.min.den);
    report.max_value = Rational::of(acc.max.num, acc.max.den);
    report.min_witnesses.assign(acc.min_wit.begin(), acc.min_wit.end());
    report.max_witnesses.assign(acc.max_wit.begin(), acc.max_wit.end());
    return report;
}

// ---------------------------------------------------------------------
// Theorem verification
// ---------------------------------------------------------------------

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
    if (text == "T2.1") return TheoremId::T2_1;
    if (text == "T2.2") return TheoremId::T2_2;
    if (text == "T2.3") return TheoremId::T2_3;
    if (text == "T2.4") return TheoremId::T2_4;
    if (text == "T2.5") return TheoremId::T2_5;
    if (text == "T2.6") return TheoremId::T2_6;
    if (text == "P3.1") return TheoremId::P3_1;
    if (text == "P3.4") return TheoremId::P3_4;
    if (text == "L-level") return TheoremId::L_level;
    if (text == "T-greedymin") return TheoremId::T_greedymin;
    if (text == "T-majorization") return TheoremId::T_majorization;
    return std::nullopt;
}

std::string theorem_name(TheoremId id) {
    switch (id) {
    case TheoremId::T2_1: return "T2.1";
    case TheoremId::T2_2: return "T2.2";
    case TheoremId::T2_3: return "T2.3";
    case TheoremId::T2_4: return "T2.4";
    case TheoremId::T2_5: return "T2.5";
    case TheoremId::T2_6: return "T2.6";
    case TheoremId::P3_1: return "P3.1";
    case TheoremId::P3_4: return "P3.4";
    case TheoremId::L_level: return "L-level";
    case TheoremId::T_greedymin: return "T-greedymin";
    case TheoremId::T_majorization: return "T-majorization";
    }
    return "?";
}

namespace {

Tree path_with_pendants(int path_vertices, const std::vector<std::pair<int, int>>& pendants) {
    std::vector<Edge> edges;
    int n = path_vertices;
    for (const auto& [pos, count] : pendants) n += count;
    for (Vertex v = 0; v + 1 < path_vertices; ++v) edges.emplace_back(v, v + 1);
    Vertex next = path_vertices;
    for (const auto& [pos, count] : pendants)
        for (int j = 0; j < count; ++j) edges.emplace_back(pos, next++);
    return Tree::from_edges(n, edges);
}

// 0-based middle positions of a path on m vertices.
std::vector<int> path_centers(int m) {
    std::vector<int> centers{(m - 1) / 2};
    if (m % 2 == 0) centers.push_back(m / 2);
    return centers;
}

// The full equality family of a ratio theorem, as canonical forms.
std::set<std::string> characterization_forms(TheoremId id, int n, const EnumerationCaps& caps,
                                             int jobs) {
    std::set<std::string> forms;
    switch (id) {
    case TheoremId::T2_1:
    case TheoremId::P3_1:
        forms.insert(canonical_form(star(n)));
        break;
    case TheoremId::T2_2: {
        BoundResult bound = min_total_over_center(n);
        std::vector<long long> xs{bound.optimal_x};
        if (bound.tight_for_both) xs.push_back(bound.optimal_x + 1);
        for (long long x : xs)
            for (int a = 0; a <= n - 2 * static_cast<int>(x); ++a)
                forms.insert(canonical_form(path_with_pendants(
                    2 * static_cast<int>(x),
                    {{static_cast<int>(x) - 1, a}, {static_cast<int>(x), n - 2 * static_cast<int>(x) - a}})));
        break;
    }
    case TheoremId::T2_3: {
        BoundResult bound = max_total_over_leaf(n);
        std::vector<long long> xs{bound.optimal_x};
        if (bound.tight_for_both) xs.push_back(bound.optimal_x + 1);
        for (long long xl : xs) {
            int x = static_cast<int>(xl);
            if (2 * x > n) continue; // only realizable parameters form trees
            for (int a = 0; a <= n - 2 * x; ++a)
                forms.insert(canonical_form(path_with_pendants(
                    2 * x - 1, {{x - 1, 1}, {1, a}, {2 * x - 3, n - 2 * x - a}})));
        }
        break;
    }
    case TheoremId::T2_4: {
        BoundResult bound = min_total_over_leaf(n);
        std::vector<long long> lengths{bound.optimal_x};
        if (bound.tight_for_both) lengths.push_back(bound.optimal_x + 2);
        for (long long ll : lengths) {
            int len = static_cast<int>(ll);
            forms.insert(canonical_form(path_with_pendants(len + 1, {{len / 2, n - len - 1}})));
        }
        break;
    }
    case TheoremId::T2_5: {
        for (int c : path_centers(n - 1))
            forms.insert(canonical_form(path_with_pendants(n - 1, {{c, 1}})));
        if (n % 2 == 0) {
            int m = n - 2;
            for (int c : path_centers(m))
                for (int pos = 1; pos + 1 < m; ++pos)
                    forms.insert(canonical_form(path_with_pendants(m, {{c, 1}, {pos, 1}})));
        }
        break;
    }
    case TheoremId::T2_6: {
        if (n <= 5) {
            // The bound degenerates to 1 here (every leaf pair ties), so the
            // equality set is every tree of the order.
            for (const Tree& t : free_tree_representatives(n, caps, jobs))
                forms.insert(canonical_form(t));
            break;
        }
        if (n % 2 == 0) {
            forms.insert(canonical_form(path_with_pendants(n - 1, {{n / 2 - 1, 1}})));
        } else {
            int m = n - 2;
            for (int pos = 1; pos + 1 < m; ++pos)
                forms.insert(canonical_form(
                    path_with_pendants(m, {{(n - 1) / 2 - 1, 1}, {pos, 1}})));
        }
        break;
    }
    default:
        fail(Errc::bad_parameter, "no characterization family for this theorem");
    }
    return forms;
}

struct DefaultRange {
    int lo;
    int hi;
};

DefaultRange default_range(TheoremId id) {
    switch (id) {
    case TheoremId::T2_1: return {3, 9};
    case TheoremId::T2_2: return {4, 9};
    case TheoremId::T2_3: return {8, 9};
    case TheoremId::T2_4: return {5, 9};
    case TheoremId::T2_5: return {5, 9};
    case TheoremId::T2_6: return {4, 9};
    case TheoremId::P3_1: return {3, 9};
    case TheoremId::P3_4: return {3, 9};
    case TheoremId::L_level: return {2, 9};
    case TheoremId::T_greedymin: return {2, 8};
    case TheoremId::T_majorization: return {2, 9};
    }
    return {2, 9};
}

InstanceResult::Tri match_sets(const std::set<std::string>& scanned,
                               const std::set<std::string>& family) {
    return scanned == family ? InstanceResult::Tri::yes : InstanceResult::Tri::no;
}

InstanceResult verify_ratio_instance(TheoremId id, int n, const VerifyOptions& opt) {
    InstanceResult inst;
    inst.instance = "n=" + std::to_string(n);
    ScanFlags flags;
    flags.iso = false;

    switch (id) {
    case TheoremId::T2_1: {
        flags.min_wit = false;
        ScanAccum acc = scan_all_of_order(n, {Objective::Kind::total_over_center, 0}, flags,
                                          opt.caps, opt.jobs);
        inst.class_size_labeled = acc.labeled;
        Rational bound = max_total_over_center(n);
        Rational observed = Rational::of(acc.max.num, acc.max.den);
        inst.bound_holds = observed <= bound;
        inst.attained = observed == bound;
        if (n >= 3) {
            inst.characterization_match =
                match_sets(acc.max_wit, characterization_forms(id, n, opt.caps, opt.jobs));
            inst.pass = inst.bound_holds && inst.attained &&
                        inst.characterization_match == InstanceResult::Tri::yes;
        } else {
            // The star characterization starts at n=3; below that only the
            // bound itself is claimed.
            inst.characterization_match = InstanceResult::Tri::not_checked;
            inst.pass = inst.bound_holds;
        }
        if (!inst.bound_holds && !acc.max_wit.empty()) inst.counterexample = *acc.max_wit.begin();
        return inst;
    }
    case TheoremId::T2_2: {
        flags.max_wit = false;
        ScanAccum acc = scan_all_of_order(n, {Objective::Kind::total_over_center, 0}, flags,
                                          opt.caps, opt.jobs);
        inst.class_size_labeled = acc.labeled;
        Rational bound = min_total_over_center(n).value;
        Rational observed = Rational::of(acc.min.num, acc.min.den);
        inst.bound_holds = observed >= bound;
        inst.attained = observed == bound;
        inst.characterization_match =
            match_sets(acc.min_wit, characterization_forms(id, n, opt.caps, opt.jobs));
        inst.pass = inst.bound_holds && inst.attained &&
                    inst.characterization_match == InstanceResult::Tri::yes;
        if (!inst.bound_holds && !acc.min_wit.empty()) inst.counterexample = *acc.min_wit.begin();
        return inst;
    }
    case TheoremId::T2_3: {
        flags.min_wit = false;
        ScanAccum acc = scan_all_of_order(n, {Objective::Kind::total_over_leaf_max, 0}, flags,
                                          opt.caps, opt.jobs);
        inst.class_size_labeled = acc.labeled;
        Rational bound = max_total_over_leaf(n).value;
        Rational observed = Rational::of(acc.max.num, acc.max.den);
        inst.bound_holds = observed <= bound;
        inst.attained = observed == bound;
        inst.characterization_match =
            match_sets(acc.max_wit, characterization_forms(id, n, opt.caps, opt.jobs));
        inst.pass = inst.bound_holds && inst.attained &&
                    inst.characterization_match == InstanceResult::Tri::yes;
        if (!inst.bound_holds && !acc.max_wit.empty()) inst.counterexample = *acc.max_wit.begin();
        return inst;
    }
    case TheoremId::T2_4: {
        flags.max_wit = false;
        ScanAccum acc = scan_all_of_order(n, {Objective::Kind::total_over_leaf_min, 0}, flags,
                                          opt.caps, opt.jobs);
        inst.class_size_labeled = acc.labeled;
        Rational bound = min_total_over_leaf(n).value;
        Rational observed = Rational::of(acc.min.num, acc.min.den);
        inst.bound_holds = observed >= bound;
        inst.attained = observed == bound;
        inst.characterization_match =
            match_sets(acc.min_wit, characterization_forms(id, n, opt.caps, opt.jobs));
        inst.pass = inst.bound_holds && inst.attained &&
                    inst.characterization_match == InstanceResult::Tri::yes;
        if (!inst.bound_holds && !acc.min_wit.empty()) inst.counterexample = *acc.min_wit.begin();
        return inst;
    }
    case TheoremId::T2_5: {
        flags.max_wit = false;
        ScanAccum low = scan_all_of_order(n, {Objective::Kind::leaf_over_center_min, 0}, flags,
                                          opt.caps, opt.jobs);
        ScanFlags none;
        none.min_wit = none.max_wit = false;
        ScanAccum high = scan_all_of_order(n, {Objective::Kind::leaf_over_center_max, 0}, none,
                                           opt.caps, opt.jobs);
        inst.class_size_labeled = low.labeled;
        LeafCenterBounds bounds = leaf_over_center_bounds(n);
        Rational observed_min = Rational::of(low.min.num, low.min.den);
        Rational observed_max = Rational::of(high.max.num, high.max.den);
        inst.bound_holds = observed_min >= *bounds.min && observed_max <= bounds.max;
        inst.attained = observed_min == *bounds.min && observed_max == bounds.max;
        inst.characterization_match =
            match_sets(low.min_wit, characterization_forms(id, n, opt.caps, opt.jobs));
        inst.pass = inst.bound_holds && inst.attained &&
                    inst.characterization_match == InstanceResult::Tri::yes;
        if (!inst.bound_holds && !low.min_wit.empty()) inst.counterexample = *low.min_wit.begin();
        return inst;
    }
    case TheoremId::T2_6: {
        flags.min_wit = false;
        ScanAccum acc = scan_all_of_order(n, {Objective::Kind::leaf_over_leaf_max, 0}, flags,
                                          opt.caps, opt.jobs);
        inst.class_size_labeled = acc.labeled;
        Rational bound = max_leaf_over_leaf(n);
        Rational observed = Rational::of(acc.max.num, acc.max.den);
        inst.bound_holds = observed <= bound;
        inst.attained = observed == bound;
        inst.characterization_match =
            match_sets(acc.max_wit, characterization_forms(id, n, opt.caps, opt.jobs));
        inst.pass = inst.bound_holds && inst.attained &&
                    inst.characterization_match == InstanceResult::Tri::yes;
        if (!inst.bound_holds && !acc.max_wit.empty()) inst.counterexample = *acc.max_wit.begin();
        return inst;
    }
    case TheoremId::P3_1: {
        flags.max_wit = false;
        ScanAccum acc =
            scan_all_of_order(n, {Objective::Kind::total_ecc, 0}, flags, opt.caps, opt.jobs);
        inst.class_size_labeled = acc.labeled;
        Rational bound(min_total_ecc(n));
        Rational observed = Rational::of(acc.min.num, acc.min.den);
        inst.bound_holds = observed >= bound;
        inst.attained = observed == bound;
        inst.characterization_match =
            match_sets(acc.min_wit, characterization_forms(id, n, opt.caps, opt.jobs));
        inst.pass = inst.bound_holds && inst.attained &&
                    inst.characterization_match == InstanceResult::Tri::yes;
        if (!inst.bound_holds && !acc.min_wit.empty()) inst.counterexample = *acc.min_wit.begin();
        return inst;
    }
    default: fail(Errc::unknown_theorem, "not a per-order theorem");
    }
}

InstanceResult verify_p3_4_instance(const DegreeSequence& ds, const VerifyOptions& opt) {
    InstanceResult inst;
    inst.instance = "ds=" + ds.str();
    ScanFlags flags;
    flags.min_wit = false;
    ScanAccum acc = scan_degree_class(ds, {Objective::Kind::total_ecc, 0}, flags, opt.caps);
    inst.class_size_labeled = acc.labeled;
    Tree caterpillar = greedy_caterpillar(ds);
    long long caterpillar_ecc = ecc_profile(caterpillar).total;
    inst.bound_holds = acc.max.num == caterpillar_ecc;
    inst.attained = acc.max_wit.count(canonical_form(caterpillar)) > 0;
    if (!inst.bound_holds && !acc.max_wit.empty()) inst.counterexample = *acc.max_wit.begin();
    // Every valid spine assignment must land on the same total.
    if (ds.internal_count() <= 6) {
        bool all_equal = true;
        for (const Tree& t : greedy_caterpillar_assignments(ds))
            if (ecc_profile(t).total != caterpillar_ecc) all_equal = false;
        inst.characterization_match =
            all_equal ? InstanceResult::Tri::yes : InstanceResult::Tri::no;
    } else {
        inst.characterization_match = InstanceResult::Tri::not_checked;
    }
    inst.pass = inst.bound_holds && inst.attained &&
                inst.characterization_match != InstanceResult::Tri::no;
    return inst;
}

InstanceResult verify_greedymin_instance(const DegreeSequence& ds, const VerifyOptions& opt) {
    InstanceResult inst;
    inst.instance = "ds=" + ds.str();
    int n = ds.n();
    if (n > kMaxFlatOrder) fail(Errc::cap_exceeded, "class order too large to scan");
    RootedTree greedy = greedy_tree(ds);
    std::vector<int> greedy_ecc = eccentricities(greedy.tree);
    std::vector<long long> greedy_count(static_cast<size_t>(n), 0);
    long long greedy_total = 0;
    for (int e : greedy_ecc) {
        greedy_total += e;
        for (int l = e; l < n; ++l) ++greedy_count[static_cast<size_t>(l)];
    }

    if (count_trees_with_degree_sequence(ds) > opt.caps.max_class_size)
        fail(Errc::cap_exceeded, "degree-sequence class larger than cap");
    std::vector<long long> best_count(static_cast<size_t>(n), 0);
    long long best_total = LLONG_MAX;
    std::string violating;
    std::vector<int> seq = degree_class_seed(ds);
    FlatTree t;
    int ecc[kMaxFlatOrder];
    long long labeled = 0;
    do {
        decode_prufer(seq.data(), static_cast<int>(seq.size()), t);
        ecc_flat(t, ecc);
        ++labeled;
        long long total = 0;
        long long count[kMaxFlatOrder] = {0};
        for (int v = 0; v < n; ++v) {
            total += ecc[v];
            ++count[ecc[v]];
        }
        long long running = 0;
        for (int l = 0; l < n; ++l) {
            running += count[l];
            if (running > best_count[static_cast<size_t>(l)]) {
                best_count[static_cast<size_t>(l)] = running;
                if (running > greedy_count[static_cast<size_t>(l)] && violating.empty())
                    violating = flat_canonical(t, ecc);
            }
        }
        best_total = std::min(best_total, total);
    } while (std::next_permutation(seq.begin(), seq.end()));

    inst.class_size_labeled = labeled;
    inst.bound_holds = best_count == greedy_count;
    inst.attained = greedy_total == best_total;
    inst.characterization_match = InstanceResult::Tri::not_checked;
    inst.counterexample = violating;
    inst.pass = inst.bound_holds && inst.attained;
    return inst;
}

InstanceResult verify_level_instance(const LevelDegreeSequence& lds, const VerifyOptions& opt) {
    InstanceResult inst;
    inst.instance = "lds=" + lds.str();
    int n = lds.vertex_count();
    RootedTree greedy = level_greedy(lds);
    std::vector<int> greedy_ecc = eccentricities(greedy.tree);
    std::vector<long long> greedy_count(static_cast<size_t>(n), 0);
    long long greedy_total = 0;
    for (int e : greedy_ecc) {
        greedy_total += e;
        for (int l = e; l < n; ++l) ++greedy_count[static_cast<size_t>(l)];
    }

    LevelClassEnumeration enumeration = enumerate_level_classes(lds, opt.caps);
    inst.class_size_labeled = enumeration.combos_scanned;
    std::vector<long long> best_count(static_cast<size_t>(n), 0);
    long long best_total = LLONG_MAX;
    std::string violating;
    for (const RootedTree& rooted : enumeration.classes) {
        std::vector<int> ecc = eccentricities(rooted.tree);
        long long total = 0;
        for (int e : ecc) total += e;
        best_total = std::min(best_total, total);
        for (int l = 0; l < n; ++l) {
            long long running = 0;
            for (int e : ecc)
                if (e <= l) ++running;
            if (running > best_count[static_cast<size_t>(l)]) {
                best_count[static_cast<size_t>(l)] = running;
                if (running > greedy_count[static_cast<size_t>(l)] && violating.empty())
                    violating = canonical_form(rooted.tree);
            }
        }
    }

    inst.bound_holds = best_count == greedy_count;
    inst.attained = greedy_total == best_total;
    inst.characterization_match = InstanceResult::Tri::not_checked;
    inst.counterexample = violating;
    inst.pass = inst.bound_holds && inst.attained;
    return inst;
}

InstanceResult verify_majorization_instance(const DegreeSequence& lower,
                                            const DegreeSequence& upper) {
    InstanceResult inst;
    inst.instance = "pi1=" + lower.str() + " pi2=" + upper.str();
    inst.characterization_match = InstanceResult::Tri::not_checked;
    try {
        GreedyEccComparison cmp = compare_greedy_ecc(lower, upper);
        bool structure_ok = cmp.chain.steps.size() == cmp.chain.step_edits.size() + 1;
        for (size_t s = 0; s + 1 < cmp.chain.steps.size() && structure_ok; ++s) {
            const auto& a = cmp.chain.steps[s];
            const auto& b = cmp.chain.steps[s + 1];
            auto [j, k] = cmp.chain.step_edits[s];
            if (j >= k) structure_ok = false;
            for (size_t p = 0; p < a.size() && structure_ok; ++p) {
                int expected_delta = p == static_cast<size_t>(j)   ? 1
                                     : p == static_cast<size_t>(k) ? -1
                                                                   : 0;
                if (b[p] - a[p] != expected_delta) structure_ok = false;
            }
        }
        bool monotone = true;
        for (size_t s = 0; s + 1 < cmp.chain_ecc.size(); ++s)
            if (cmp.chain_ecc[s] < cmp.chain_ecc[s + 1]) monotone = false;
        inst.bound_holds = structure_ok && monotone && cmp.ecc_from >= cmp.ecc_to;
        inst.attained = inst.bound_holds;
        inst.class_size_labeled = static_cast<long long>(cmp.chain.steps.size());
        inst.pass = inst.bound_holds;
    } catch (const Error&) {
        inst.bound_holds = false;
        inst.attained = false;
        inst.pass = false;
    }
    return inst;
}

} // namespace

VerificationReport verify_theorem(TheoremId id, const VerifyOptions& options) {
    VerificationReport report;
    report.theorem = id;
    DefaultRange range = default_range(id);
    int lo = options.n_min > 0 ? options.n_min : range.lo;
    int hi = options.n_max > 0 ? options.n_max : range.hi;
    if (hi < range.lo)
        fail(Errc::bad_parameter, theorem_name(id) + " needs n >= " + std::to_string(range.lo));
    if (lo < range.lo) lo = range.lo;
    if (hi < lo) hi = lo;

    auto push = [&](InstanceResult inst) {
        if (options.on_instance) options.on_instance(inst);
        report.instances.push_back(std::move(inst));
    };

    switch (id) {
    case TheoremId::T2_1:
    case TheoremId::T2_2:
    case TheoremId::T2_3:
    case TheoremId::T2_4:
    case TheoremId::T2_5:
    case TheoremId::T2_6:
    case TheoremId::P3_1:
        for (int n = lo; n <= hi; ++n) push(verify_ratio_instance(id, n, options));
        break;
    case TheoremId::P3_4:
        for (int n = std::max(lo, 3); n <= hi; ++n)
            for (const DegreeSequence& ds : all_degree_sequences(n))
                push(verify_p3_4_instance(ds, options));
        break;
    case TheoremId::T_greedymin:
        for (int n = std::max(lo, 2); n <= hi; ++n)
            for (const DegreeSequence& ds : all_degree_sequences(n))
                push(verify_greedymin_instance(ds, options));
        break;
    case TheoremId::L_level:
        for (const LevelDegreeSequence& lds : all_level_degree_sequences(hi))
            if (lds.vertex_count() >= lo) push(verify_level_instance(lds, options));
        break;
    case TheoremId::T_majorization:
        for (int n = std::max(lo, 2); n <= hi; ++n) {
            std::vector<DegreeSequence> sequences = all_degree_sequences(n);
            for (const DegreeSequence& lower : sequences)
                for (const DegreeSequence& upper : sequences)
                    if (majorizes(upper, lower))
                        push(verify_majorization_instance(lower, upper));
        }
        break;
    }

    report.pass = true;
    for (const InstanceResult& inst : report.instances)
        if (!inst.pass) report.pass = false;
    return report;
}

// ---------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------

namespace {

nlohmann::ordered_json rational_json(const Rational& value) {
    nlohmann::ordered_json obj;
    obj["num"] = static_cast<long long>(value.num());
    obj["den"] = static_cast<long long>(value.den());
    return obj;
}

nlohmann::ordered_json instance_json(const InstanceResult& inst, TheoremId theorem) {
    nlohmann::ordered_json obj;
    obj["theorem"] = theorem_name(theorem);
    obj["instance"] = inst.instance;
    obj["bound_holds"] = inst.bound_holds;
    obj["attained"] = inst.attained;
    switch (inst.characterization_match) {
    case InstanceResult::Tri::yes: obj["characterization_match"] = "yes"; break;
    case InstanceResult::Tri::no: obj["characterization_match"] = "no"; break;
    case InstanceResult::Tri::not_checked: obj["characterization_match"] = "not-checked"; break;
    }
    if (inst.counterexample.empty())
        obj["counterexample"] = nullptr;
    else
        obj["counterexample"] = inst.counterexample;
    obj["class_size_labeled"] = inst.class_size_labeled;
    obj["pass"] = inst.pass;
    return obj;
}

} // namespace

std::string to_json(const SearchReport& report) {
    nlohmann::ordered_json obj;
    obj["class_size_labeled"] = report.class_size_labeled;
    if (report.class_size_iso >= 0)
        obj["class_size_iso"] = report.class_size_iso;
    else
        obj["class_size_iso"] = nullptr;
    obj["min_value"] = rational_json(report.min_value);
    obj["max_value"] = rational_json(report.max_value);
    obj["min_witnesses"] = report.min_witnesses;
    obj["max_witnesses"] = report.max_witnesses;
    return obj.dump();
}

std::string to_json(const InstanceResult& instance, TheoremId theorem) {
    return instance_json(instance, theorem).dump();
}

std::string to_json(const VerificationReport& report) {
    nlohmann::ordered_json obj;
    obj["theorem"] = theorem_name(report.theorem);
    obj["pass"] = report.pass;
    auto& arr = obj["instances"] = nlohmann::ordered_json::array();
    for (const InstanceResult& inst : report.instances)
        arr.push_back(instance_json(inst, report.theorem));
    return obj.dump();
}

} // namespace ecc
