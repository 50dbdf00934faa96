#include "csf/graph.hpp"

#include <algorithm>

namespace csf {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Graph::Graph(int n, const std::vector<Edge>& edges, std::optional<std::string> tag) : n_(n), tag_(std::move(tag)) {
    require(n >= 0, "graph order must be nonnegative");
    for (auto [u, v] : edges) {
        require(u >= 0 && v >= 0 && u < n && v < n,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n = " + std::to_string(n));
        require(u != v, "loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(), "duplicate edge");
}

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{std::min(u, v), std::max(u, v)});
}

Graph Graph::with_edge(int u, int v) const {
    if (has_edge(u, v)) return *this;
    auto edges = edges_;
    edges.emplace_back(u, v);
    return Graph(n_, edges, tag_);
}

Graph Graph::without_edge(int u, int v) const {
    auto edges = edges_;
    std::erase(edges, Edge{std::min(u, v), std::max(u, v)});
    return Graph(n_, edges, tag_);
}

Graph Graph::with_tag(std::string tag) const {
    Graph g = *this;
    g.tag_ = std::move(tag);
    return g;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    require(n >= 0, "path: n must be nonnegative");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges, "path:" + std::to_string(n));
}

Graph cycle_graph(int m) {
    require(m >= 2, "cycle: need m >= 2, got " + std::to_string(m));
    Graph g = path_graph(m);
    return g.with_edge(0, m - 1).with_tag("cycle:" + std::to_string(m));
}

Graph complete_graph(int n) {
    require(n >= 0, "complete: n must be nonnegative");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges, "complete:" + std::to_string(n));
}

Graph tadpole_graph(int m, int l) {
    require(m >= 2, "tadpole: need m >= 2, got " + std::to_string(m));
    require(l >= 0, "tadpole: need l >= 0, got " + std::to_string(l));
    // Cycle on 0..m-1, tail m..m+l-1 hanging from vertex m-1.
    auto edges = cycle_graph(m).edges();
    for (int v = m - 1; v < m + l - 1; ++v) edges.emplace_back(v, v + 1);
    return Graph(m + l, edges, "tadpole:" + std::to_string(m) + "," + std::to_string(l));
}

Graph kchain_graph(const Composition& parts) {
    std::vector<Edge> edges;
    int next = 0;
    int joint = -1;
    for (int size : parts) {
        std::vector<int> clique;
        if (joint >= 0) clique.push_back(joint);
        for (int k = 0; k < size; ++k) clique.push_back(next++);
        for (std::size_t x = 0; x < clique.size(); ++x)
            for (std::size_t y = x + 1; y < clique.size(); ++y) edges.emplace_back(clique[x], clique[y]);
        joint = next - 1;
    }
    return Graph(next, edges, "kchain:" + parts.to_string());
}

Graph hat_graph(int a, int m, int b) {
    require(m >= 2, "hat: need m >= 2, got " + std::to_string(m));
    require(a >= 0 && b >= 0, "hat: need a, b >= 0");
    const int n = a + m + b;
    // v_k is vertex k - 1.
    Graph g = path_graph(n).with_edge(a, a + m - 1);
    return g.with_tag("hat:" + std::to_string(a) + "," + std::to_string(m) + "," + std::to_string(b));
}

Graph spider_graph(int a, int b, int c) {
    require(a >= 0 && b >= 0 && c >= 0, "spider: leg lengths must be nonnegative");
    std::vector<Edge> edges;
    int next = 1;
    for (int leg : {a, b, c}) {
        int prev = 0;
        for (int k = 0; k < leg; ++k) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(next, edges,
                 "spider:" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
}

Graph line_graph(const Graph& g) {
    const auto& e = g.edges();
    std::vector<Edge> edges;
    for (std::size_t x = 0; x < e.size(); ++x)
        for (std::size_t y = x + 1; y < e.size(); ++y) {
            auto [a, b] = e[x];
            auto [c, d] = e[y];
            if (a == c || a == d || b == c || b == d) edges.emplace_back(static_cast<int>(x), static_cast<int>(y));
        }
    return Graph(static_cast<int>(e.size()), edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    auto edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
    return Graph(g.order() + h.order(), edges);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    require(static_cast<int>(perm.size()) == g.order(), "relabel: permutation size mismatch");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges, g.tag());
}

Graph triple_graph(const Graph& g, const std::array<int, 3>& t, unsigned subset) {
    Graph out = g;
    if (subset & 1u) out = out.with_edge(t[0], t[1]);
    if (subset & 2u) out = out.with_edge(t[1], t[2]);
    if (subset & 4u) out = out.with_edge(t[0], t[2]);
    return out;
}

TripleDeletionResult triple_deletion_check(const Graph& g, const std::array<int, 3>& t, const OracleOptions& options) {
    for (int v : t) require(v >= 0 && v < g.order(), "triple vertex out of range");
    require(t[0] != t[1] && t[1] != t[2] && t[0] != t[2], "triple vertices must be distinct");
    require(!g.has_edge(t[0], t[1]) && !g.has_edge(t[1], t[2]) && !g.has_edge(t[0], t[2]),
            "triple is not a stable set");
    std::array<SymPoly, 8> x;
    for (unsigned s = 0; s < 8; ++s) x[s] = csf_oracle(triple_graph(g, t, s), options);
    constexpr unsigned e1 = 1, e2 = 2, e3 = 4;
    TripleDeletionResult r;
    r.first_identity = x[e1 | e2] == x[e1] + x[e2 | e3] - x[e3];
    r.second_identity = x[e1 | e2 | e3] == x[e1 | e3] + x[e2 | e3] - x[e3];
    return r;
}

}  // namespace csf
