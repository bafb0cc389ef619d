#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "graphsym/graph.hpp"

namespace graphsym {

// Pairwise distances are BFS-exact; -1 marks an unreachable pair.
// ecc / radius / diameter / center are populated only for connected graphs.
struct Metrics {
    static constexpr int kUnreachable = -1;

    int n = 0;
    std::vector<int> dist;  // flattened n*n
    bool connected = false;
    std::vector<int> ecc;
    int radius = -1;
    int diameter = -1;
    std::vector<int> center;

    int at(int u, int v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
};

inline std::vector<int> single_source_distances(const Graph& g, int src) {
    const int n = g.vertex_count();
    std::vector<int> d(n, Metrics::kUnreachable);
    std::vector<int> queue;
    queue.reserve(n);
    d[src] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int u : g.neighbors(v)) {
            if (d[u] == Metrics::kUnreachable) {
                d[u] = d[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return d;
}

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    auto d = single_source_distances(g, 0);
    return std::none_of(d.begin(), d.end(),
                        [](int x) { return x == Metrics::kUnreachable; });
}

inline Metrics metrics(const Graph& g) {
    const int n = g.vertex_count();
    Metrics m;
    m.n = n;
    m.dist.assign(static_cast<std::size_t>(n) * n, Metrics::kUnreachable);
    m.connected = true;
    for (int v = 0; v < n; ++v) {
        auto d = single_source_distances(g, v);
        for (int u = 0; u < n; ++u) {
            m.dist[static_cast<std::size_t>(v) * n + u] = d[u];
            if (d[u] == Metrics::kUnreachable) m.connected = false;
        }
    }
    if (n == 0) m.connected = true;
    if (m.connected && n > 0) {
        m.ecc.assign(n, 0);
        for (int v = 0; v < n; ++v)
            m.ecc[v] = *std::max_element(m.dist.begin() + static_cast<std::size_t>(v) * n,
                                         m.dist.begin() + static_cast<std::size_t>(v + 1) * n);
        m.radius = *std::min_element(m.ecc.begin(), m.ecc.end());
        m.diameter = *std::max_element(m.ecc.begin(), m.ecc.end());
        for (int v = 0; v < n; ++v)
            if (m.ecc[v] == m.radius) m.center.push_back(v);
    }
    return m;
}

inline bool is_path_graph_shape(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1 || g.edge_count() != n - 1 || !is_connected(g)) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

inline bool is_cycle_graph_shape(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

inline bool is_star_graph_shape(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || g.edge_count() != n - 1) return false;
    int centers = 0, leaves = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) ++centers;
        if (g.degree(v) == 1) ++leaves;
    }
    return n == 2 ? centers == 2 : (centers == 1 && leaves == n - 1);
}

inline bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int src = 0; src < n; ++src) {
        if (color[src] != -1) continue;
        color[src] = 0;
        std::vector<int> queue{src};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int u : g.neighbors(v)) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// S_k(x): vertices at distance exactly k from x; sphere(g,x,0) = {x}.
inline std::vector<int> sphere(const Graph& g, int x, int k) {
    if (x < 0 || x >= g.vertex_count())
        throw std::invalid_argument("sphere: center out of range");
    if (k < 0) throw std::invalid_argument("sphere: radius must be >= 0");
    auto d = single_source_distances(g, x);
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (d[v] == k) out.push_back(v);
    return out;
}

}  // namespace graphsym
