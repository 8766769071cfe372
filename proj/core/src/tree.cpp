#include "ecctree/tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ecc {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    // false if already joined
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

} // namespace

Tree Tree::from_edges(int n, const std::vector<Edge>& edges) {
    if (n <= 0) fail(Errc::bad_parameter, "tree needs a positive vertex count");
    if (static_cast<int>(edges.size()) != n - 1)
        fail(edges.size() + 1 > static_cast<size_t>(n) ? Errc::cycle_detected : Errc::disconnected,
             "tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                 " edges, got " + std::to_string(edges.size()));

    std::vector<Edge> seen;
    seen.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(Errc::index_out_of_range,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                     std::to_string(n));
        if (u == v)
            fail(Errc::cycle_detected, "self-loop at vertex " + std::to_string(u));
        seen.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(seen.begin(), seen.end());
    if (auto it = std::adjacent_find(seen.begin(), seen.end()); it != seen.end())
        fail(Errc::duplicate_edge,
             "edge (" + std::to_string(it->first) + "," + std::to_string(it->second) +
                 ") listed more than once");

    Tree t;
    t.n_ = n;
    t.adj_.assign(static_cast<size_t>(n), {});
    UnionFind uf(n);
    for (const auto& [u, v] : edges) {
        if (!uf.unite(u, v))
            fail(Errc::cycle_detected,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") closes a cycle");
        t.adj_[static_cast<size_t>(u)].push_back(v);
        t.adj_[static_cast<size_t>(v)].push_back(u);
    }
    // n-1 successful unions on n vertices leave a single component.
    for (auto& list : t.adj_) std::sort(list.begin(), list.end());
    return t;
}

std::vector<Edge> Tree::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(n_ > 0 ? n_ - 1 : 0));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<Vertex> Tree::leaves() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v)
        if (degree(v) == 1) out.push_back(v);
    return out;
}

Tree Tree::relabeled(const std::vector<Vertex>& perm) const {
    std::vector<Edge> mapped;
    mapped.reserve(static_cast<size_t>(n_ - 1));
    for (auto [u, v] : edges())
        mapped.emplace_back(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return from_edges(n_, mapped);
}

namespace {

int parse_int(std::string_view token, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        fail(Errc::invalid_format,
             "line " + std::to_string(line_no) + ": expected integer, got '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

} // namespace

Tree parse_tree(std::string_view text) {
    int n = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (n < 0) {
            if (tokens.size() != 2 || tokens[0] != "n")
                fail(Errc::invalid_format,
                     "line " + std::to_string(line_no) + ": expected header 'n <count>'");
            n = parse_int(tokens[1], line_no);
            if (n <= 0)
                fail(Errc::invalid_format,
                     "line " + std::to_string(line_no) + ": vertex count must be positive");
            continue;
        }
        if (tokens.size() != 2)
            fail(Errc::invalid_format,
                 "line " + std::to_string(line_no) + ": expected edge 'u v'");
        edges.emplace_back(parse_int(tokens[0], line_no), parse_int(tokens[1], line_no));
    }
    if (n < 0) fail(Errc::invalid_format, "missing header line 'n <count>'");
    return Tree::from_edges(n, edges);
}

Tree parse_tree_json(std::string_view text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
        !doc["n"].is_number_integer() || !doc["edges"].is_array())
        fail(Errc::invalid_format, "expected JSON object {\"n\": int, \"edges\": [[u,v],...]}");
    int n = doc["n"].get<int>();
    std::vector<Edge> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            fail(Errc::invalid_format, "edge entries must be [u, v] integer pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Tree::from_edges(n, edges);
}

Tree parse_tree_auto(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{' ? parse_tree_json(text) : parse_tree(text);
    }
    fail(Errc::invalid_format, "empty tree document");
}

std::string format_tree(const Tree& tree) {
    std::string out = "n " + std::to_string(tree.n()) + "\n";
    for (auto [u, v] : tree.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string format_tree_json(const Tree& tree) {
    nlohmann::ordered_json doc;
    doc["n"] = tree.n();
    auto& arr = doc["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : tree.edges()) arr.push_back({u, v});
    return doc.dump();
}

int RootedTree::height() const {
    return *std::max_element(height_of.begin(), height_of.end());
}

std::vector<std::vector<Vertex>> RootedTree::levels() const {
    std::vector<std::vector<Vertex>> out(static_cast<size_t>(height() + 1));
    for (Vertex v = 0; v < n(); ++v)
        out[static_cast<size_t>(height_of[static_cast<size_t>(v)])].push_back(v);
    return out;
}

RootedTree root_at(const Tree& tree, Vertex root) {
    if (root < 0 || root >= tree.n())
        fail(Errc::index_out_of_range, "root " + std::to_string(root) + " out of range");
    RootedTree r(tree);
    r.root = root;
    r.parent.assign(static_cast<size_t>(tree.n()), -1);
    r.height_of.assign(static_cast<size_t>(tree.n()), -1);
    std::vector<Vertex> queue;
    queue.reserve(static_cast<size_t>(tree.n()));
    queue.push_back(root);
    r.height_of[static_cast<size_t>(root)] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex w : tree.neighbors(v)) {
            if (r.height_of[static_cast<size_t>(w)] >= 0) continue;
            r.height_of[static_cast<size_t>(w)] = r.height_of[static_cast<size_t>(v)] + 1;
            r.parent[static_cast<size_t>(w)] = v;
            queue.push_back(w);
        }
    }
    return r;
}

namespace {

// BFS order and distances from a start vertex.
void bfs(const Tree& tree, Vertex start, std::vector<int>& dist, std::vector<Vertex>& order) {
    dist.assign(static_cast<size_t>(tree.n()), -1);
    order.clear();
    order.push_back(start);
    dist[static_cast<size_t>(start)] = 0;
    for (size_t head = 0; head < order.size(); ++head) {
        Vertex v = order[head];
        for (Vertex w : tree.neighbors(v))
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                order.push_back(w);
            }
    }
}

Vertex farthest(const std::vector<int>& dist) {
    return static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

} // namespace

std::vector<Vertex> center_of(const Tree& tree) {
    std::vector<int> dist;
    std::vector<Vertex> order;
    bfs(tree, 0, dist, order);
    Vertex a = farthest(dist);
    bfs(tree, a, dist, order);
    Vertex b = farthest(dist);
    int diameter = dist[static_cast<size_t>(b)];
    // Walk the a-b path back from b; its middle vertices form the center.
    RootedTree from_a = root_at(tree, a);
    std::vector<Vertex> path;
    for (Vertex v = b; v != -1; v = from_a.parent[static_cast<size_t>(v)]) path.push_back(v);
    std::vector<Vertex> centers;
    centers.push_back(path[static_cast<size_t>(diameter / 2)]);
    if (diameter % 2 == 1) centers.push_back(path[static_cast<size_t>(diameter / 2 + 1)]);
    std::sort(centers.begin(), centers.end());
    return centers;
}

std::string rooted_canonical_form(const Tree& tree, Vertex root) {
    RootedTree r = root_at(tree, root);
    // Reverse-BFS order guarantees all children are encoded before their
    // parent, so no recursion is needed.
    std::vector<Vertex> order;
    {
        std::vector<int> dist;
        bfs(tree, root, dist, order);
    }
    std::vector<std::string> code(static_cast<size_t>(tree.n()));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        std::vector<std::string> child_codes;
        for (Vertex w : tree.neighbors(v))
            if (w != r.parent[static_cast<size_t>(v)])
                child_codes.push_back(code[static_cast<size_t>(w)]);
        std::sort(child_codes.begin(), child_codes.end());
        std::string s = "(";
        for (const auto& c : child_codes) s += c;
        s += ")";
        code[static_cast<size_t>(v)] = std::move(s);
    }
    return code[static_cast<size_t>(root)];
}

std::string canonical_form(const Tree& tree) {
    std::vector<Vertex> centers = center_of(tree);
    std::string best = rooted_canonical_form(tree, centers[0]);
    if (centers.size() == 2) {
        std::string other = rooted_canonical_form(tree, centers[1]);
        if (other < best) best = std::move(other);
    }
    return best;
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
    int n = static_cast<int>(degrees_.size());
    if (n < 2)
        fail(Errc::invalid_degree_sequence,
             "degree sequence needs at least 2 entries (the paper's positivity condition rules out n=1)");
    long long sum = 0;
    for (int d : degrees_) {
        if (d < 1) fail(Errc::invalid_degree_sequence, "degrees must be positive");
        sum += d;
    }
    if (sum != 2LL * (n - 1))
        fail(Errc::invalid_degree_sequence,
             "degree sum " + std::to_string(sum) + " != 2(n-1) = " + std::to_string(2 * (n - 1)));
}

int DegreeSequence::internal_count() const {
    int k = 0;
    for (int d : degrees_)
        if (d > 1) ++k;
    return k;
}

std::string DegreeSequence::str() const {
    std::string out;
    for (size_t i = 0; i < degrees_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(degrees_[i]);
    }
    return out;
}

DegreeSequence degree_sequence_of(const Tree& tree) {
    if (tree.n() < 2)
        fail(Errc::invalid_degree_sequence, "single-vertex tree has no positive degree sequence");
    std::vector<int> degrees(static_cast<size_t>(tree.n()));
    for (Vertex v = 0; v < tree.n(); ++v) degrees[static_cast<size_t>(v)] = tree.degree(v);
    return DegreeSequence(std::move(degrees));
}

LevelDegreeSequence::LevelDegreeSequence(std::vector<std::vector<int>> levels)
    : levels_(std::move(levels)) {
    if (levels_.empty())
        fail(Errc::invalid_level_sequence, "level 0: no levels given");
    for (auto& level : levels_) std::sort(level.begin(), level.end(), std::greater<>());
    if (levels_[0].size() != 1)
        fail(Errc::invalid_level_sequence, "level 0: must contain exactly the root degree");
    for (size_t i = 0; i < levels_.size(); ++i) {
        if (levels_[i].empty())
            fail(Errc::invalid_level_sequence, "level " + std::to_string(i) + ": empty level");
        long long slots = 0;
        for (int d : levels_[i]) {
            if (d < 1)
                fail(Errc::invalid_level_sequence,
                     "level " + std::to_string(i) + ": degrees must be positive");
            slots += i == 0 ? d : d - 1;
        }
        long long next = i + 1 < levels_.size() ? static_cast<long long>(levels_[i + 1].size()) : 0;
        if (slots != next)
            fail(Errc::invalid_level_sequence,
                 "level " + std::to_string(i) + ": down-degrees sum to " + std::to_string(slots) +
                     " but level " + std::to_string(i + 1) + " has " + std::to_string(next) +
                     " vertices");
    }
    flattened(); // validates the union as a tree degree sequence
}

int LevelDegreeSequence::vertex_count() const {
    int count = 0;
    for (const auto& level : levels_) count += static_cast<int>(level.size());
    return count;
}

DegreeSequence LevelDegreeSequence::flattened() const {
    std::vector<int> all;
    for (const auto& level : levels_) all.insert(all.end(), level.begin(), level.end());
    return DegreeSequence(std::move(all));
}

std::string LevelDegreeSequence::str() const {
    std::string out;
    for (size_t i = 0; i < levels_.size(); ++i) {
        if (i > 0) out += ";";
        for (size_t j = 0; j < levels_[i].size(); ++j) {
            if (j > 0) out += ",";
            out += std::to_string(levels_[i][j]);
        }
    }
    return out;
}

LevelDegreeSequence level_degree_sequence_of(const RootedTree& rooted) {
    std::vector<std::vector<int>> levels(static_cast<size_t>(rooted.height() + 1));
    for (Vertex v = 0; v < rooted.n(); ++v)
        levels[static_cast<size_t>(rooted.height_of[static_cast<size_t>(v)])].push_back(
            rooted.tree.degree(v));
    return LevelDegreeSequence(std::move(levels));
}

} // namespace ecc
