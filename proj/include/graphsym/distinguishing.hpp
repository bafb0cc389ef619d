#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphsym/automorphism.hpp"
#include "graphsym/errors.hpp"
#include "graphsym/labeling.hpp"

namespace graphsym {

struct SearchLimits {
    std::int64_t budget = 100'000'000;  // prefix nodes per computation
};

struct DistinguishingResult {
    int value;
    Labeling certificate;
};

namespace detail {

// Exhaustive search for a labeling of M items (vertices, edges, or both)
// preserved only by the identity. Items are labeled in index order with two
// prunings: (a) label values first appear in increasing order; (b) the set of
// automorphisms still consistent with the labeled prefix is filtered
// incrementally, and a branch is accepted as soon as it becomes empty.
class ItemSearch {
public:
    // perms: item permutation per non-identity automorphism. Tables are laid
    // out [item][automorphism] so the live-set scan reads contiguously.
    ItemSearch(int items, std::vector<std::vector<int>> perms)
        : items_(items), num_auts_(static_cast<int>(perms.size())) {
        fwd_.resize(static_cast<std::size_t>(items_) * num_auts_);
        inv_.resize(static_cast<std::size_t>(items_) * num_auts_);
        support_max_.assign(num_auts_, -1);
        for (int a = 0; a < num_auts_; ++a) {
            for (int i = 0; i < items_; ++i) {
                fwd_[static_cast<std::size_t>(i) * num_auts_ + a] = perms[a][i];
                inv_[static_cast<std::size_t>(perms[a][i]) * num_auts_ + a] = i;
                if (perms[a][i] != i)
                    support_max_[a] = std::max({support_max_[a], i, perms[a][i]});
            }
        }
    }

    std::optional<std::vector<int>> find(int d, std::int64_t& nodes, std::int64_t budget) {
        if (items_ == 0)
            return num_auts_ == 0 ? std::optional<std::vector<int>>(std::vector<int>{})
                                  : std::nullopt;
        if (num_auts_ == 0) return std::vector<int>(items_, 1);
        labels_.assign(items_, 0);
        live_.assign(items_ + 1, {});
        live_[0].resize(num_auts_);
        for (int a = 0; a < num_auts_; ++a) live_[0][a] = a;
        return descend(0, 0, d, nodes, budget) ? std::optional(labels_) : std::nullopt;
    }

private:
    bool descend(int t, int max_used, int d, std::int64_t& nodes, std::int64_t budget) {
        const int top = std::min(d, max_used + 1);
        const int* fwd = fwd_.data() + static_cast<std::size_t>(t) * num_auts_;
        const int* inv = inv_.data() + static_cast<std::size_t>(t) * num_auts_;
        for (int lab = 1; lab <= top; ++lab) {
            if (++nodes > budget)
                throw BudgetExceeded("distinguishing search: node budget " +
                                     std::to_string(budget) + " exceeded");
            labels_[t] = lab;
            auto& survivors = live_[t + 1];
            survivors.clear();
            bool hopeless = false;
            for (int a : live_[t]) {
                const int u = fwd[a];
                const int w = inv[a];
                if ((u < t && labels_[u] != lab) || (w < t && labels_[w] != lab)) continue;
                // A survivor whose whole support is labeled can never be
                // killed later; no completion of this prefix distinguishes.
                if (support_max_[a] <= t) {
                    hopeless = true;
                    break;
                }
                survivors.push_back(a);
            }
            if (hopeless) continue;
            if (survivors.empty()) {
                for (int i = t + 1; i < items_; ++i) labels_[i] = 1;
                return true;
            }
            if (t + 1 < items_ && descend(t + 1, std::max(max_used, lab), d, nodes, budget))
                return true;
        }
        labels_[t] = 0;
        return false;
    }

    int items_;
    int num_auts_;
    std::vector<int> fwd_, inv_;
    std::vector<int> support_max_;
    std::vector<int> labels_;
    std::vector<std::vector<int>> live_;
};

inline std::vector<std::vector<int>> vertex_item_perms(const Graph& g,
                                                       const AutomorphismSet& auts) {
    std::vector<std::vector<int>> perms;
    for (const auto& p : auts.elements)
        if (!p.is_identity()) perms.push_back(p.image);
    (void)g;
    return perms;
}

inline std::vector<std::vector<int>> edge_item_perms(const Graph& g,
                                                     const AutomorphismSet& auts) {
    std::vector<std::vector<int>> perms;
    for (const auto& p : auts.elements)
        if (!p.is_identity()) perms.push_back(edge_action(g, p));
    return perms;
}

}  // namespace detail

// Exact D(G): least d admitting a vertex labeling preserved only by the identity.
inline DistinguishingResult distinguishing_number(const Graph& g, const AutomorphismSet& auts,
                                                  const SearchLimits& limits = {}) {
    const int n = g.vertex_count();
    if (n == 0) return {1, Labeling::vertex(1, {})};
    detail::ItemSearch search(n, detail::vertex_item_perms(g, auts));
    std::int64_t nodes = 0;
    for (int d = 1; d <= n; ++d) {
        if (auto found = search.find(d, nodes, limits.budget))
            return {d, Labeling::vertex(d, *found)};
    }
    throw std::logic_error("distinguishing_number: exhausted label counts");  // unreachable
}

inline DistinguishingResult distinguishing_number(const Graph& g,
                                                  const SearchLimits& limits = {}) {
    return distinguishing_number(g, enumerate_automorphisms(g), limits);
}

// Exact D'(G). nullopt when undefined: some non-identity automorphism acts
// trivially on the edge set (K_2 is the connected case), so every edge
// labeling is preserved by it.
inline std::optional<DistinguishingResult> distinguishing_index(
    const Graph& g, const AutomorphismSet& auts, const SearchLimits& limits = {}) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("distinguishing_index: graph has no edges");
    auto perms = detail::edge_item_perms(g, auts);
    for (const auto& act : perms) {
        bool trivial = true;
        for (std::size_t e = 0; e < act.size(); ++e)
            if (act[e] != static_cast<int>(e)) {
                trivial = false;
                break;
            }
        if (trivial) return std::nullopt;
    }
    const int m = g.edge_count();
    detail::ItemSearch search(m, std::move(perms));
    std::int64_t nodes = 0;
    for (int d = 1; d <= m; ++d) {
        if (auto found = search.find(d, nodes, limits.budget))
            return DistinguishingResult{d, Labeling::edge(d, *found)};
    }
    throw std::logic_error("distinguishing_index: exhausted label counts");  // unreachable
}

inline std::optional<DistinguishingResult> distinguishing_index(
    const Graph& g, const SearchLimits& limits = {}) {
    return distinguishing_index(g, enumerate_automorphisms(g), limits);
}

// Exact D''(G) over combined vertex+edge labelings. Items are interleaved so
// each edge follows its later endpoint, which lets the prefix filter bite as
// early as possible.
inline DistinguishingResult total_distinguishing_number(const Graph& g,
                                                        const AutomorphismSet& auts,
                                                        const SearchLimits& limits = {}) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<int> layout;  // item slot -> vertex v or edge n+e
    layout.reserve(n + m);
    for (int v = 0; v < n; ++v) {
        layout.push_back(v);
        for (int e = 0; e < m; ++e)
            if (g.edges()[e].second == v) layout.push_back(n + e);
    }
    std::vector<int> pos(n + m);
    for (int i = 0; i < n + m; ++i) pos[layout[i]] = i;

    std::vector<std::vector<int>> perms;
    for (const auto& p : auts.elements) {
        if (p.is_identity()) continue;
        auto ea = edge_action(g, p);
        std::vector<int> act(n + m);
        for (int i = 0; i < n + m; ++i) {
            int item = layout[i];
            int image = item < n ? p(item) : n + ea[item - n];
            act[i] = pos[image];
        }
        perms.push_back(std::move(act));
    }
    detail::ItemSearch search(n + m, std::move(perms));
    std::int64_t nodes = 0;
    for (int d = 1; d <= n + m; ++d) {
        if (auto found = search.find(d, nodes, limits.budget)) {
            std::vector<int> vl(n), el(m);
            for (int v = 0; v < n; ++v) vl[v] = (*found)[pos[v]];
            for (int e = 0; e < m; ++e) el[e] = (*found)[pos[n + e]];
            return {d, Labeling::total(d, std::move(vl), std::move(el))};
        }
    }
    throw std::logic_error("total_distinguishing_number: exhausted label counts");
}

inline DistinguishingResult total_distinguishing_number(const Graph& g,
                                                        const SearchLimits& limits = {}) {
    return total_distinguishing_number(g, enumerate_automorphisms(g), limits);
}

// --- Closed-form bounds ---

// ceil(sqrt(delta)).
inline int kalinowski_bound(int delta) {
    if (delta < 1) throw std::invalid_argument("kalinowski_bound: delta >= 1");
    int s = 1;
    while (static_cast<long long>(s) * s < delta) ++s;
    return s;
}

// 2^k + sum_{j=3}^{s} j^{k-1}; the empty sum applies for s = 2.
inline std::int64_t sphere_label_capacity(int s, int k) {
    auto ipow = [](std::int64_t b, int e) {
        std::int64_t r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    };
    std::int64_t cap = ipow(2, k);
    for (int j = 3; j <= s; ++j) cap += ipow(j, k - 1);
    return cap;
}

// min{s >= 2 : 2^k + sum_{j=3}^s j^{k-1} >= delta}. The minimization starts
// at s = 2 since the constant 2^k term would otherwise certify one label.
inline int sphere_bound(int k, int delta) {
    if (k < 1 || delta < 1) throw std::invalid_argument("sphere_bound: k,delta >= 1");
    for (int s = 2;; ++s)
        if (sphere_label_capacity(s, k) >= delta) return s;
}

// min{s : s(s+1)/2 >= dprime} = ceil((-1+sqrt(1+8 dprime))/2).
inline int pair_bound(int dprime) {
    if (dprime < 1) throw std::invalid_argument("pair_bound: dprime >= 1");
    for (int s = 1;; ++s)
        if (static_cast<long long>(s) * (s + 1) / 2 >= dprime) return s;
}

// Number of reversal-classes of non-palindromic k-tuples over s labels.
inline std::int64_t reversal_class_count(int s, int k) {
    auto ipow = [](std::int64_t b, int e) {
        std::int64_t r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    };
    return (ipow(s, k) - ipow(s, (k + 1) / 2)) / 2;
}

// min{s : reversal_class_count(s,k) >= dprime}.
inline int tuple_bound(int dprime, int k) {
    if (dprime < 1 || k < 2) throw std::invalid_argument("tuple_bound: dprime >= 1, k >= 2");
    for (int s = 1;; ++s)
        if (reversal_class_count(s, k) >= dprime) return s;
}

}  // namespace graphsym
