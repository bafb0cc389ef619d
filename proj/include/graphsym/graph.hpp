#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphsym {

using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

/// Immutable simple undirected graph on vertices 0..n-1 with adjacency bitsets.
class Graph {
public:
    Graph() = default;

    // Validates ids and rejects self-loops; duplicate edges collapse.
    static Graph build(int n, const EdgeList& edges) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
        Graph g;
        g.init(n);
        for (const auto& [a, b] : edges) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::invalid_argument("edge (" + std::to_string(a) + "," +
                                            std::to_string(b) + ") out of range for n=" +
                                            std::to_string(n));
            if (a == b)
                throw std::invalid_argument("self-loop (" + std::to_string(a) + "," +
                                            std::to_string(b) + ") rejected");
            g.set_edge(a, b);
        }
        g.finish();
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
                (v & 63)) & 1u;
    }

    int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

    // Neighbors in ascending order.
    const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }

    // Canonical sorted edge list: pairs (i,j) with i<j, lexicographic.
    const EdgeList& edges() const { return edges_; }

    // Index into the canonical edge list, or -1 when {u,v} is not an edge.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v}) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        return d;
    }

    int max_degree() const {
        int m = 0;
        for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
        return m;
    }

    bool is_complete() const {
        return static_cast<long long>(edge_count()) * 2 ==
               static_cast<long long>(n_) * (n_ - 1);
    }

    bool is_edgeless() const { return edges_.empty(); }

    bool same_edges(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void init(int n) {
        n_ = n;
        words_ = n == 0 ? 1 : (n + 63) / 64;
        bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
        nbrs_.assign(n_, {});
    }

    void set_edge(int a, int b) {
        bits_[static_cast<std::size_t>(a) * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
        bits_[static_cast<std::size_t>(b) * words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63);
    }

    void finish() {
        for (int v = 0; v < n_; ++v) {
            for (int u = 0; u < n_; ++u)
                if (u != v && adjacent(v, u)) nbrs_[v].push_back(u);
        }
        for (int v = 0; v < n_; ++v)
            for (int u : nbrs_[v])
                if (v < u) edges_.emplace_back(v, u);
        std::sort(edges_.begin(), edges_.end());
    }

    int n_ = 0;
    int words_ = 1;
    std::vector<std::uint64_t> bits_;
    std::vector<std::vector<int>> nbrs_;
    EdgeList edges_;
};

// Identity-map equality: same vertex count and identical edge sets.
// This is NOT isomorphism.
inline bool graph_equal(const Graph& a, const Graph& b) { return a.same_edges(b); }

// --- Standard families (canonical vertex numbering documented per function) ---

// Vertices 0..n-1 in traversal order.
inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::build(n, e);
}

// Vertices 0..n-1 in traversal order.
inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::build(n, e);
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph requires n >= 1");
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::build(n, e);
}

// K_{1,m}: center is vertex 0, leaves 1..m.
inline Graph star_graph(int m) {
    if (m < 1) throw std::invalid_argument("star requires m >= 1");
    EdgeList e;
    for (int i = 1; i <= m; ++i) e.emplace_back(0, i);
    return Graph::build(m + 1, e);
}

// Parts 0..a-1 and a..a+b-1.
inline Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite requires a,b >= 1");
    EdgeList e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::build(a + b, e);
}

// Join of K_1 with two disjoint K_2: apex 0 adjacent to all, edges {1,2} and {3,4}.
inline Graph fan2_graph() {
    return Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}});
}

}  // namespace graphsym
