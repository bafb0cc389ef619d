#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "graphsym/graph.hpp"
#include "graphsym/metrics.hpp"

namespace graphsym {

namespace detail {

// Upper-triangle bit index in graph6 column-major order: (0,1),(0,2),(1,2),...
inline int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

inline std::uint64_t graph_to_mask(const Graph& g) {
    std::uint64_t mask = 0;
    for (const auto& [i, j] : g.edges()) mask |= std::uint64_t{1} << pair_bit(i, j);
    return mask;
}

inline Graph mask_to_graph(int n, std::uint64_t mask) {
    EdgeList edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_bit(i, j)) & 1) edges.emplace_back(i, j);
    return Graph::build(n, edges);
}

// For every permutation of n vertices, where each upper-triangle bit goes.
inline const std::vector<std::vector<int>>& edge_perm_tables(int n) {
    static std::map<int, std::vector<std::vector<int>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const int bits = n * (n - 1) / 2;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<int>> tables;
    do {
        std::vector<int> t(bits);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                int a = perm[i], b = perm[j];
                if (a > b) std::swap(a, b);
                t[pair_bit(i, j)] = pair_bit(a, b);
            }
        tables.push_back(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cache.emplace(n, std::move(tables)).first->second;
}

// Lexicographically smallest mask over all vertex relabelings. With the
// graph6 bit order this makes the canonical form the smallest graph6 string.
inline std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    if (n > 10) throw std::invalid_argument("canonical_mask: n > 10 unsupported");
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& t : edge_perm_tables(n)) {
        std::uint64_t m = 0;
        std::uint64_t rest = mask;
        while (rest) {
            int b = std::countr_zero(rest);
            rest &= rest - 1;
            m |= std::uint64_t{1} << t[b];
        }
        if (m < best) best = m;
    }
    return best;
}

// All isomorphism classes on n vertices (connected or not), as sorted
// canonical masks, built by augmenting the (n-1)-vertex classes with every
// neighborhood of a new vertex.
inline const std::vector<std::uint64_t>& iso_classes(int n) {
    static std::map<int, std::vector<std::uint64_t>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::uint64_t> result;
    if (n == 1) {
        result = {0};
    } else {
        const auto& prev = iso_classes(n - 1);
        std::set<std::uint64_t> seen;
        const int base_bits = (n - 1) * (n - 2) / 2;
        for (std::uint64_t h : prev) {
            for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
                std::uint64_t mask = h;
                for (int i = 0; i < n - 1; ++i)
                    if ((nbrs >> i) & 1) mask |= std::uint64_t{1} << (base_bits + i);
                seen.insert(canonical_mask(n, mask));
            }
        }
        result.assign(seen.begin(), seen.end());
    }
    return cache.emplace(n, std::move(result)).first->second;
}

}  // namespace detail

// One representative per isomorphism class, deterministic order (ascending
// canonical mask). Exhaustive generation is supported for n <= 7.
inline std::vector<Graph> all_graphs(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("all_graphs: exhaustive mode supports 1 <= n <= 7");
    std::vector<Graph> out;
    for (std::uint64_t mask : detail::iso_classes(n))
        out.push_back(detail::mask_to_graph(n, mask));
    return out;
}

inline std::vector<Graph> connected_graphs(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("connected_graphs: exhaustive mode supports 1 <= n <= 7");
    std::vector<Graph> out;
    for (std::uint64_t mask : detail::iso_classes(n)) {
        Graph g = detail::mask_to_graph(n, mask);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

// Seeded random connected graphs for 8 <= n <= 10, deduplicated by raw edge
// mask. Raw engine bits only, so runs reproduce across platforms.
inline std::vector<Graph> sampled_connected_graphs(int n, int count, std::uint32_t seed) {
    if (n < 8 || n > 10)
        throw std::invalid_argument("sampled_connected_graphs: sampling mode supports 8 <= n <= 10");
    if (count < 1) throw std::invalid_argument("sampled_connected_graphs: count >= 1");
    std::mt19937 rng(seed);
    const int bits = n * (n - 1) / 2;
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    int guard = 0;
    while (static_cast<int>(out.size()) < count && ++guard < 100000) {
        std::uint64_t mask = 0;
        for (int b = 0; b < bits; ++b)
            if (rng() & 1u) mask |= std::uint64_t{1} << b;
        if (!seen.insert(mask).second) continue;
        Graph g = detail::mask_to_graph(n, mask);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

// Isomorphism test by canonical form; intended for small test fixtures.
inline bool isomorphic_small(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    const int n = a.vertex_count();
    if (n <= 1) return true;
    return detail::canonical_mask(n, detail::graph_to_mask(a)) ==
           detail::canonical_mask(n, detail::graph_to_mask(b));
}

}  // namespace graphsym
