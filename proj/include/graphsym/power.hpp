#pragma once

#include <stdexcept>
#include <vector>

#include "graphsym/graph.hpp"
#include "graphsym/metrics.hpp"

namespace graphsym {

// Same vertex set; xy is an edge iff 1 <= dist_g(x,y) <= k.
inline Graph power(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("power: k must be >= 1");
    const int n = g.vertex_count();
    EdgeList edges;
    for (int v = 0; v < n; ++v) {
        auto d = single_source_distances(g, v);
        for (int u = v + 1; u < n; ++u)
            if (d[u] != Metrics::kUnreachable && d[u] >= 1 && d[u] <= k)
                edges.emplace_back(v, u);
    }
    return Graph::build(n, edges);
}

// One original edge (u,v), u<v, and its internal vertices ordered by distance
// from u. Empty for k = 1.
struct SuperEdge {
    int u;
    int v;
    std::vector<int> internal;
};

// A k-subdivision together with the bookkeeping that names each internal
// vertex by (original edge, position). Internal ids are assigned contiguously
// from base_n, edges processed in lexicographic order, positions ascending.
struct SubdividedGraph {
    Graph graph;
    Graph base;
    int k = 1;
    std::vector<SuperEdge> superedges;

    int base_n() const { return base.vertex_count(); }
    bool is_internal(int v) const { return v >= base.vertex_count(); }

    // Vertex sequence of one superedge from u to v inclusive: u, w_1, ..., w_{k-1}, v.
    std::vector<int> superedge_path(const SuperEdge& se) const {
        std::vector<int> path;
        path.reserve(k + 1);
        path.push_back(se.u);
        for (int w : se.internal) path.push_back(w);
        path.push_back(se.v);
        return path;
    }
};

inline SubdividedGraph subdivide(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("subdivide: k must be >= 1");
    const int base_n = g.vertex_count();
    SubdividedGraph out;
    out.base = g;
    out.k = k;
    EdgeList edges;
    int next_id = base_n;
    for (const auto& [u, v] : g.edges()) {
        SuperEdge se{u, v, {}};
        int prev = u;
        for (int l = 1; l < k; ++l) {
            se.internal.push_back(next_id);
            edges.emplace_back(prev, next_id);
            prev = next_id++;
        }
        edges.emplace_back(prev, v);
        out.superedges.push_back(std::move(se));
    }
    out.graph = Graph::build(base_n + (k - 1) * g.edge_count(), edges);
    return out;
}

enum class FractionalOrder { power_then_subdivide, subdivide_then_power };

// G^{m/n}: either the n-subdivision of G^m or the m-th power of the
// n-subdivision. The two constructions generally differ.
inline Graph fractional_power(const Graph& g, int m, int n, FractionalOrder order) {
    if (m < 1 || n < 1) throw std::invalid_argument("fractional_power: m,n must be >= 1");
    if (order == FractionalOrder::power_then_subdivide)
        return subdivide(power(g, m), n).graph;
    return power(subdivide(g, n).graph, m);
}

// power_then_subdivide keeps its superedge structure; expose it on request.
inline SubdividedGraph fractional_power_subdivided(const Graph& g, int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("fractional_power: m,n must be >= 1");
    return subdivide(power(g, m), n);
}

// Claim evaluator for the harness: with d = kq + r, 0 <= r < k, the claimed
// distance in G^k is q + r. Checked against BFS elsewhere, never used as
// trusted arithmetic.
inline int power_distance_claim(int d, int k) {
    if (d < 0 || k < 1) throw std::invalid_argument("power_distance_claim: d >= 0, k >= 1");
    return d / k + d % k;
}

}  // namespace graphsym
