#pragma once

#include <optional>
#include <vector>

#include "graphsym/graph.hpp"
#include "graphsym/metrics.hpp"

namespace graphsym {

// Exact backtracking search for a Hamiltonian path. Exponential, so graphs
// above `cap` vertices are not attempted: nullopt means "skipped", never a
// silent wrong answer.
inline std::optional<bool> hamiltonian_path_exists(const Graph& g, int cap = 12) {
    const int n = g.vertex_count();
    if (n > cap) return std::nullopt;
    if (n <= 1) return true;
    if (!is_connected(g)) return false;

    // Every degree-1 vertex must be a path endpoint.
    int leaves = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) ++leaves;
    if (leaves > 2) return false;

    std::vector<bool> used(n, false);
    int placed = 0;

    auto extend = [&](auto&& self, int v) -> bool {
        if (placed == n) return true;
        for (int u : g.neighbors(v)) {
            if (used[u]) continue;
            used[u] = true;
            ++placed;
            if (self(self, u)) return true;
            used[u] = false;
            --placed;
        }
        return false;
    };

    for (int start = 0; start < n; ++start) {
        used.assign(n, false);
        used[start] = true;
        placed = 1;
        if (extend(extend, start)) return true;
    }
    return false;
}

}  // namespace graphsym
