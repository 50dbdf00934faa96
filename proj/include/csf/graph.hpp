#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "csf/composition.hpp"
#include "csf/sym.hpp"

namespace csf {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v,
/// sorted, without duplicates.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, const std::vector<Edge>& edges = {}, std::optional<std::string> tag = std::nullopt);

    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::optional<std::string>& tag() const { return tag_; }

    bool has_edge(int u, int v) const;
    /// Returns a copy with the edge added; adding an existing edge is a no-op.
    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    Graph with_tag(std::string tag) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::optional<std::string> tag_;
};

Graph edgeless_graph(int n);
Graph path_graph(int n);
/// C_2 is modelled as K_2.
Graph cycle_graph(int m);
Graph complete_graph(int n);
/// C_m with a pendant path of l further vertices; |V| = |E| = m + l.
Graph tadpole_graph(int m, int l);
/// Cliques K_{i_1}, K_{i_2+1}, ... glued in a chain on distinct cut vertices.
Graph kchain_graph(const Composition& parts);
/// Path v_1..v_n (n = a + m + b) plus the edge v_{a+1} v_{a+m}.
Graph hat_graph(int a, int m, int b);
/// Three legs with a, b, c vertices hanging from one centre; n = a + b + c + 1.
Graph spider_graph(int a, int b, int c);

Graph line_graph(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Raised when an exponential computation would exceed its configured cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    /// Maximum number of edges accepted.
    std::size_t edge_cap = 24;
    /// Cut subtrees whose next edge closes a cycle; their signed sum is zero.
    bool prune_cycles = true;
};

/// X_G = sum over edge subsets E' of (-1)^{|E'|} p_{tau(E')}, where tau(E')
/// lists the component orders of the spanning subgraph (V, E').
SymPoly csf_oracle(const Graph& g, const OracleOptions& options = {});

/// Edges added for S subset of {1,2,3}: e1 = t1t2, e2 = t2t3, e3 = t1t3.
struct TripleDeletionResult {
    bool first_identity = false;   // X_{G12} = X_{G1} + X_{G23} - X_{G3}
    bool second_identity = false;  // X_{G123} = X_{G13} + X_{G23} - X_{G3}
    bool holds() const { return first_identity && second_identity; }
};

/// G_S for the triple t: g plus the edges named by the bits of `subset`
/// (bit 0 = e1, bit 1 = e2, bit 2 = e3).
Graph triple_graph(const Graph& g, const std::array<int, 3>& t, unsigned subset);

TripleDeletionResult triple_deletion_check(const Graph& g, const std::array<int, 3>& t,
                                           const OracleOptions& options = {});

}  // namespace csf
