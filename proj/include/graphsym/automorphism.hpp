#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "graphsym/errors.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/metrics.hpp"
#include "graphsym/permutation.hpp"
#include "graphsym/power.hpp"

namespace graphsym {

inline bool is_automorphism(const Graph& g, const Permutation& p) {
    if (p.size() != g.vertex_count())
        throw std::invalid_argument("is_automorphism: permutation length mismatch");
    if (!p.is_bijection()) return false;
    for (const auto& [u, v] : g.edges())
        if (!g.adjacent(p(u), p(v))) return false;
    // Edge count is preserved by a bijection, so one direction suffices.
    return true;
}

/// Explicit list of all automorphisms, sorted lexicographically by image array.
struct AutomorphismSet {
    std::vector<Permutation> elements;

    int order() const { return static_cast<int>(elements.size()); }

    bool contains(const Permutation& p) const {
        return std::binary_search(elements.begin(), elements.end(), p);
    }
};

struct AutLimits {
    std::int64_t max_order = 1'000'000;
    int max_vertices = 64;
};

namespace detail {

inline long long checked_factorial(int n, std::int64_t cap) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
        if (f > cap) return -1;
    }
    return f;
}

}  // namespace detail

// Exhaustive, duplicate-free enumeration by backtracking over vertex images.
// Pruning: degree match plus exact distance vector to already-placed vertices;
// candidates tried in ascending id, so output order is lexicographic.
// Complete and edgeless graphs short-circuit to all n! permutations.
inline AutomorphismSet enumerate_automorphisms(const Graph& g, const AutLimits& limits = {}) {
    const int n = g.vertex_count();
    if (n > limits.max_vertices)
        throw CapExceeded("enumerate_automorphisms: n=" + std::to_string(n) +
                          " exceeds vertex cap " + std::to_string(limits.max_vertices));

    AutomorphismSet out;
    if (n == 0) {
        out.elements.push_back(Permutation::identity(0));
        return out;
    }

    if (g.is_complete() || g.is_edgeless()) {
        long long total = detail::checked_factorial(n, limits.max_order);
        if (total < 0)
            throw CapExceeded("enumerate_automorphisms: |Aut| = " + std::to_string(n) +
                              "! exceeds order cap " + std::to_string(limits.max_order));
        Permutation p = Permutation::identity(n);
        do {
            out.elements.push_back(p);
        } while (std::next_permutation(p.image.begin(), p.image.end()));
        return out;
    }

    Metrics m = metrics(g);
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);

    auto backtrack = [&](auto&& self, int v) -> void {
        if (v == n) {
            if (static_cast<std::int64_t>(out.elements.size()) >= limits.max_order)
                throw CapExceeded("enumerate_automorphisms: |Aut| exceeds order cap " +
                                  std::to_string(limits.max_order));
            out.elements.emplace_back(image);
            return;
        }
        const int dv = g.degree(v);
        for (int w = 0; w < n; ++w) {
            if (used[w] || g.degree(w) != dv) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u) {
                if (m.at(v, u) != m.at(w, image[u])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = true;
            self(self, v + 1);
            used[w] = false;
            image[v] = -1;
        }
    };
    backtrack(backtrack, 0);
    return out;
}

// Action of an automorphism on the canonical sorted edge list: edge {u,v}
// maps to {p(u),p(v)}. Returns the induced permutation of edge indices.
inline std::vector<int> edge_action(const Graph& g, const Permutation& p) {
    if (!is_automorphism(g, p))
        throw std::invalid_argument("edge_action: permutation is not an automorphism");
    const auto& edges = g.edges();
    std::vector<int> act(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        int idx = g.edge_index(p(edges[e].first), p(edges[e].second));
        act[e] = idx;
    }
    return act;
}

// Restriction of an automorphism of a subdivision to the base vertex ids,
// verified to be an automorphism of the base graph. A base vertex mapped to
// an internal vertex signals a precondition breach (cycle base, etc.).
inline Permutation restrict_to_base(const SubdividedGraph& sg, const Permutation& p) {
    if (p.size() != sg.graph.vertex_count())
        throw std::invalid_argument("restrict_to_base: permutation length mismatch");
    const int bn = sg.base_n();
    std::vector<int> img(bn);
    for (int v = 0; v < bn; ++v) {
        int w = p(v);
        if (w >= bn)
            throw std::invalid_argument(
                "restrict_to_base: base vertex " + std::to_string(v) +
                " maps to internal vertex " + std::to_string(w) +
                " (precondition breach: base must be connected, order >= 3, not a cycle)");
        img[v] = w;
    }
    Permutation q(std::move(img));
    if (!is_automorphism(sg.base, q))
        throw std::invalid_argument("restrict_to_base: restriction is not an automorphism of the base");
    return q;
}

// True iff every element of a is an element of b.
inline bool is_subgroup(const AutomorphismSet& a, const AutomorphismSet& b) {
    if (!a.elements.empty() && !b.elements.empty() &&
        a.elements.front().size() != b.elements.front().size())
        throw std::invalid_argument("is_subgroup: vertex-count mismatch");
    for (const auto& p : a.elements)
        if (!b.contains(p)) return false;
    return true;
}

}  // namespace graphsym
