#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "graphsym/distinguishing.hpp"
#include "graphsym/errors.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/labeling.hpp"
#include "graphsym/power.hpp"

namespace graphsym {

// Output of a constructive labeler. The labeling is always certified
// distinguishing on `target` before being returned; constructions that cannot
// certify throw ConstructionError instead of returning a bad artifact.
struct LabelerResult {
    Graph target;
    Labeling labeling;
    int labels_used = 0;
    int bound_value = 0;  // label count the construction's formula predicts
    std::vector<std::string> notes;
};

namespace detail {

inline std::vector<std::vector<int>> all_k_tuples(int s, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k, 1);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == s) cur[i--] = 1;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

inline bool is_palindrome_tuple(const std::vector<int>& t) {
    for (std::size_t i = 0, j = t.size() - 1; i < j; ++i, --j)
        if (t[i] != t[j]) return false;
    return true;
}

// Lexicographic selection of one representative per reversal-class of
// non-palindromic k-tuples; count matches reversal_class_count(s,k).
inline std::vector<std::vector<int>> reversal_distinct_tuples(int s, int k) {
    std::vector<std::vector<int>> out;
    std::set<std::vector<int>> taken_reversals;
    for (auto& t : all_k_tuples(s, k)) {
        if (is_palindrome_tuple(t)) continue;
        if (taken_reversals.count(t)) continue;
        std::vector<int> rev(t.rbegin(), t.rend());
        taken_reversals.insert(rev);
        out.push_back(t);
    }
    return out;
}

// Label one superedge leg walked from vertex `from`: tuple positions
// 1..k-1 land on internal vertices in walk order, position k on the far end.
inline void assign_leg(const SubdividedGraph& sg, const SuperEdge& se, int from,
                       const std::vector<int>& tuple, std::vector<int>& vl) {
    const int k = sg.k;
    std::vector<int> path = sg.superedge_path(se);
    if (from == se.v) std::reverse(path.begin(), path.end());
    for (int i = 1; i <= k; ++i) vl[path[i]] = tuple[i - 1];
}

inline void certify_or_throw(const Graph& target, const Labeling& l, const char* who) {
    auto auts = enumerate_automorphisms(target);
    if (!is_distinguishing(target, auts, l))
        throw ConstructionError(std::string(who) + ": labeling failed certification");
}

}  // namespace detail

// Vertex labeling of the k-subdivision of K_{1,m}: center labeled 1, each leg
// (k-1 internal vertices then the leaf, ordered from the center) one distinct
// k-tuple over s labels, tuples taken in lexicographic order.
inline LabelerResult star_subdivision_labeling(int m, int k, int s) {
    if (m < 1 || k < 1) throw std::invalid_argument("star_subdivision_labeling: m,k >= 1");
    if (s < 2) throw std::invalid_argument("star_subdivision_labeling: s >= 2");
    const std::int64_t capacity = sphere_label_capacity(s, k);
    if (capacity < m)
        throw ConstructionError("star_subdivision_labeling: needs " + std::to_string(m) +
                                " tuples but the construction provides " +
                                std::to_string(capacity) + " at s=" + std::to_string(s));
    SubdividedGraph sg = subdivide(star_graph(m), k);
    std::vector<int> vl(sg.graph.vertex_count(), 0);
    vl[0] = 1;
    auto tuples = detail::all_k_tuples(s, k);
    for (int leg = 0; leg < m; ++leg)
        detail::assign_leg(sg, sg.superedges[leg], 0, tuples[leg], vl);

    LabelerResult res;
    res.target = sg.graph;
    res.labeling = Labeling::vertex(s, std::move(vl));
    res.bound_value = s;
    detail::certify_or_throw(res.target, res.labeling, "star_subdivision_labeling");
    res.labels_used = res.labeling.labels_used();
    return res;
}

// Vertex labeling of G^{1/k} with sphere_bound(k, maxdeg) labels, built along
// a BFS tree: root labeled 2, legs carry k-tuples, the all-ones tuple is
// duplicated on the first two root legs whenever sphere 2 can later separate
// them, and internal vertices of non-tree superedges get label 2.
// Stars delegate to the star construction; cycles get an asymmetric 2-label
// pattern along the subdivided cycle.
inline LabelerResult bfs_sphere_labeling(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (n < 3 || !is_connected(g))
        throw std::invalid_argument("bfs_sphere_labeling: g must be connected with n >= 3");
    if (k < 2) throw std::invalid_argument("bfs_sphere_labeling: k >= 2");

    if (is_star_graph_shape(g))
        return star_subdivision_labeling(n - 1, k, sphere_bound(k, n - 1));

    if (is_cycle_graph_shape(g)) {
        // A 2-point label set on a cycle is fixed by a reflection, so mark the
        // cyclic positions {0,1,3}; their gap pattern (1,2,N-3) is asymmetric
        // for N >= 6.
        SubdividedGraph sg = subdivide(g, k);
        const int N = sg.graph.vertex_count();
        std::vector<int> ring;
        ring.reserve(N);
        int prev = -1, cur = 0;
        do {
            ring.push_back(cur);
            const auto& nb = sg.graph.neighbors(cur);
            int next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        } while (cur != 0);
        std::vector<int> vl(N, 1);
        vl[ring[0]] = 2;
        vl[ring[1]] = 2;
        vl[ring[3]] = 2;
        LabelerResult res;
        res.target = sg.graph;
        res.labeling = Labeling::vertex(2, std::move(vl));
        res.bound_value = 2;
        detail::certify_or_throw(res.target, res.labeling, "bfs_sphere_labeling(cycle)");
        res.labels_used = res.labeling.labels_used();
        return res;
    }

    const int delta = g.max_degree();
    const int s = sphere_bound(k, delta);
    SubdividedGraph sg = subdivide(g, k);

    // BFS tree rooted at the lowest-id maximum-degree vertex, children in
    // ascending id order.
    int root = 0;
    while (g.degree(root) != delta) ++root;
    std::vector<int> parent(n, -1), depth(n, -1), order;
    order.reserve(n);
    depth[root] = 0;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int u : g.neighbors(v)) {
            if (depth[u] == -1) {
                depth[u] = depth[v] + 1;
                parent[u] = v;
                order.push_back(u);
            }
        }
    }

    auto tuples = detail::all_k_tuples(s, k);
    const std::vector<int> all_ones = tuples.front();
    const std::vector<std::vector<int>> rest(tuples.begin() + 1, tuples.end());

    auto superedge_of = [&](int a, int b) -> const SuperEdge& {
        int u = std::min(a, b), v = std::max(a, b);
        for (const auto& se : sg.superedges)
            if (se.u == u && se.v == v) return se;
        throw std::logic_error("superedge lookup failed");
    };

    std::vector<int> vl(sg.graph.vertex_count(), 0);
    vl[root] = 2;

    bool has_sphere2 = std::any_of(depth.begin(), depth.end(), [](int d) { return d == 2; });
    int v1 = -1, v2 = -1;
    const auto& root_legs = g.neighbors(root);
    if (has_sphere2) {
        for (int u : root_legs) {
            bool reaches = std::any_of(g.neighbors(u).begin(), g.neighbors(u).end(),
                                       [&](int w) { return depth[w] == 2; });
            if (reaches) {
                v1 = u;
                break;
            }
        }
        for (int u : root_legs)
            if (u != v1) {
                v2 = u;
                break;
            }
    }

    std::size_t next_rest = 0;
    for (int u : root_legs) {
        if (u == v1 || u == v2) {
            detail::assign_leg(sg, superedge_of(root, u), root, all_ones, vl);
        } else if (has_sphere2) {
            if (next_rest >= rest.size())
                throw ConstructionError("bfs_sphere_labeling: tuple pool exhausted at root");
            detail::assign_leg(sg, superedge_of(root, u), root, rest[next_rest++], vl);
        } else {
            // No sphere 2 to separate a duplicated pair later: all legs get
            // distinct tuples, the all-ones one included.
            if (static_cast<std::size_t>(next_rest) >= tuples.size())
                throw ConstructionError("bfs_sphere_labeling: tuple pool exhausted at root");
            detail::assign_leg(sg, superedge_of(root, u), root, tuples[next_rest++], vl);
        }
    }

    // Deeper spheres in BFS order; pool restarts per parent. The offset keeps
    // the child tuple sets of v1 and v2 distinct so the duplicated pair gets
    // separated.
    for (std::size_t idx = 1; idx < order.size(); ++idx) {
        int p = order[idx];
        std::size_t pool_at = (p == v2) ? 1 : 0;
        for (int c : g.neighbors(p)) {
            if (parent[c] != p) continue;
            if (pool_at >= rest.size())
                throw ConstructionError("bfs_sphere_labeling: tuple pool exhausted below vertex " +
                                        std::to_string(p));
            detail::assign_leg(sg, superedge_of(p, c), p, rest[pool_at++], vl);
        }
    }

    // Internal vertices of non-tree superedges.
    for (const auto& se : sg.superedges) {
        bool tree_edge = parent[se.u] == se.v || parent[se.v] == se.u;
        if (!tree_edge)
            for (int w : se.internal) vl[w] = 2;
    }

    LabelerResult res;
    res.target = sg.graph;
    res.labeling = Labeling::vertex(s, std::move(vl));
    res.bound_value = s;
    detail::certify_or_throw(res.target, res.labeling, "bfs_sphere_labeling");
    res.labels_used = res.labeling.labels_used();
    return res;
}

// Turns a certified distinguishing edge labeling of G^{1/k} into a vertex
// labeling of G^{1/(k+1)}: each superedge's k internal vertices receive, in
// order from the lower endpoint, the k edge labels of the corresponding
// superedge of G^{1/k}; original vertices get label 1.
inline LabelerResult edge_to_vertex_transfer(const Graph& g, int k, const Labeling& el) {
    const int n = g.vertex_count();
    if (n < 3 || !is_connected(g) || is_cycle_graph_shape(g))
        throw std::invalid_argument("edge_to_vertex_transfer: g must be connected, n >= 3, not a cycle");
    if (k < 1) throw std::invalid_argument("edge_to_vertex_transfer: k >= 1");
    if (el.kind != LabelingKind::edge)
        throw std::invalid_argument("edge_to_vertex_transfer: el must be an edge labeling");

    SubdividedGraph from = subdivide(g, k);
    validate_labeling(from.graph, el);
    if (!is_distinguishing(from.graph, enumerate_automorphisms(from.graph), el))
        throw std::invalid_argument("edge_to_vertex_transfer: input labeling is not distinguishing");

    SubdividedGraph to = subdivide(g, k + 1);
    std::vector<int> vl(to.graph.vertex_count(), 0);
    for (int v = 0; v < n; ++v) vl[v] = 1;
    for (std::size_t e = 0; e < from.superedges.size(); ++e) {
        auto path_from = from.superedge_path(from.superedges[e]);
        const auto& internal_to = to.superedges[e].internal;  // k vertices
        for (int i = 0; i < k; ++i) {
            int ei = from.graph.edge_index(path_from[i], path_from[i + 1]);
            vl[internal_to[i]] = el.edge_labels[ei];
        }
    }

    LabelerResult res;
    res.target = to.graph;
    res.labeling = Labeling::vertex(el.d, std::move(vl));
    res.bound_value = el.labels_used();
    detail::certify_or_throw(res.target, res.labeling, "edge_to_vertex_transfer");
    res.labels_used = res.labeling.labels_used();
    return res;
}

namespace detail {

// Class rank (1-based, by ascending label value) per edge of g under el.
inline std::vector<int> edge_classes(const Labeling& el, int& num_classes) {
    std::vector<int> values(el.edge_labels);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    num_classes = static_cast<int>(values.size());
    std::vector<int> cls(el.edge_labels.size());
    for (std::size_t e = 0; e < cls.size(); ++e)
        cls[e] = static_cast<int>(std::lower_bound(values.begin(), values.end(),
                                                   el.edge_labels[e]) -
                                  values.begin());
    return cls;
}

inline void require_distinguishing_edge_input(const Graph& g, const Labeling& el,
                                              const char* who) {
    if (g.vertex_count() < 3 || !is_connected(g) || is_cycle_graph_shape(g))
        throw std::invalid_argument(std::string(who) + ": g must be connected, n >= 3, not a cycle");
    if (el.kind != LabelingKind::edge)
        throw std::invalid_argument(std::string(who) + ": el must be an edge labeling");
    validate_labeling(g, el);
    if (!is_distinguishing(g, enumerate_automorphisms(g), el))
        throw std::invalid_argument(std::string(who) + ": input labeling is not distinguishing");
}

}  // namespace detail

// Edge labeling of G^{1/2}: the two subdivision edges of every class-i edge
// get an ordered pair (c_i1, c_i2), c_i1 != c_i2, with distinct unordered
// pairs across classes. Pairs come from the smallest label count with enough
// unordered pairs; if that exceeds the pair_bound prediction, or if a
// certification retry bumps it, a note records the fact.
inline LabelerResult pair_edge_labeling(const Graph& g, const Labeling& el) {
    detail::require_distinguishing_edge_input(g, el, "pair_edge_labeling");
    int num_classes = 0;
    auto cls = detail::edge_classes(el, num_classes);
    const int paper_s = pair_bound(num_classes);

    LabelerResult res;
    res.bound_value = paper_s;
    int s = paper_s;
    while (static_cast<long long>(s) * (s - 1) / 2 < num_classes) ++s;
    if (s != paper_s)
        res.notes.push_back("pair pool at s=" + std::to_string(paper_s) +
                            " has only " + std::to_string(paper_s * (paper_s - 1) / 2) +
                            " unordered pairs for " + std::to_string(num_classes) +
                            " classes; raised to s=" + std::to_string(s));

    SubdividedGraph sg = subdivide(g, 2);
    for (int attempt = 0; attempt < 4; ++attempt, ++s) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 1; a <= s && static_cast<int>(pairs.size()) < num_classes; ++a)
            for (int b = a + 1; b <= s && static_cast<int>(pairs.size()) < num_classes; ++b)
                pairs.emplace_back(a, b);
        if (static_cast<int>(pairs.size()) < num_classes) continue;

        std::vector<int> labels(sg.graph.edge_count(), 0);
        for (std::size_t e = 0; e < sg.superedges.size(); ++e) {
            auto path = sg.superedge_path(sg.superedges[e]);
            auto [c1, c2] = pairs[cls[e]];
            labels[sg.graph.edge_index(path[0], path[1])] = c1;
            labels[sg.graph.edge_index(path[1], path[2])] = c2;
        }
        Labeling out = Labeling::edge(s, std::move(labels));
        auto auts = enumerate_automorphisms(sg.graph);
        if (is_distinguishing(sg.graph, auts, out)) {
            res.target = sg.graph;
            res.labeling = std::move(out);
            res.labels_used = res.labeling.labels_used();
            return res;
        }
        res.notes.push_back("certification failed at s=" + std::to_string(s) + "; retrying");
    }
    throw ConstructionError("pair_edge_labeling: no certified labeling found");
}

// Edge labeling of G^{1/k}: one non-palindromic k-tuple per class, tuples
// pairwise reversal-distinct, components laid along each superedge from its
// lower original endpoint.
inline LabelerResult tuple_edge_labeling(const Graph& g, int k, const Labeling& el) {
    if (k < 2) throw std::invalid_argument("tuple_edge_labeling: k >= 2");
    detail::require_distinguishing_edge_input(g, el, "tuple_edge_labeling");
    int num_classes = 0;
    auto cls = detail::edge_classes(el, num_classes);

    LabelerResult res;
    res.bound_value = tuple_bound(num_classes, k);
    int s = res.bound_value;
    SubdividedGraph sg = subdivide(g, k);
    for (int attempt = 0; attempt < 4; ++attempt, ++s) {
        auto pool = detail::reversal_distinct_tuples(s, k);
        if (static_cast<int>(pool.size()) < num_classes) {
            res.notes.push_back("tuple pool exhausted at s=" + std::to_string(s));
            continue;
        }
        std::vector<int> labels(sg.graph.edge_count(), 0);
        for (std::size_t e = 0; e < sg.superedges.size(); ++e) {
            auto path = sg.superedge_path(sg.superedges[e]);
            const auto& tuple = pool[cls[e]];
            for (int i = 0; i < k; ++i)
                labels[sg.graph.edge_index(path[i], path[i + 1])] = tuple[i];
        }
        Labeling out = Labeling::edge(s, std::move(labels));
        auto auts = enumerate_automorphisms(sg.graph);
        if (is_distinguishing(sg.graph, auts, out)) {
            res.target = sg.graph;
            res.labeling = std::move(out);
            res.labels_used = res.labeling.labels_used();
            return res;
        }
        res.notes.push_back("certification failed at s=" + std::to_string(s) + "; retrying");
    }
    throw ConstructionError("tuple_edge_labeling: no certified labeling found");
}

// Vertex labeling of P_n^k. For k <= radius the two vertices of each
// symmetric degree pair get labels 1 and 2; beyond the radius the full-degree
// clique additionally gets pairwise distinct labels. bound_value carries the
// two-branch formula value (2, resp. 2k-n) next to the actual label count.
inline LabelerResult path_power_labeling(int n, int k) {
    if (n < 4) throw std::invalid_argument("path_power_labeling: n >= 4");
    if (k < 1 || k > n - 1) throw std::invalid_argument("path_power_labeling: 1 <= k <= n-1");
    const int r = n / 2;  // radius of P_n
    Graph target = power(path_graph(n), k);
    std::vector<int> vl(n, 1);
    int used = 2;
    if (k <= r) {
        for (int j = 0; j < k; ++j) {
            vl[j] = 1;
            vl[n - 1 - j] = 2;
        }
    } else {
        for (int j = 0; j <= n - 2 - k; ++j) {
            vl[j] = 1;
            vl[n - 1 - j] = 2;
        }
        int next = 1;
        for (int v = n - 1 - k; v <= k; ++v) vl[v] = next++;
        used = next - 1;
    }
    LabelerResult res;
    res.target = std::move(target);
    res.labeling = Labeling::vertex(std::max(used, 2), std::move(vl));
    res.bound_value = (k <= r) ? 2 : 2 * k - n;
    detail::certify_or_throw(res.target, res.labeling, "path_power_labeling");
    res.labels_used = res.labeling.labels_used();
    if (res.labels_used != res.bound_value)
        res.notes.push_back("formula value " + std::to_string(res.bound_value) +
                            " differs from labels used " + std::to_string(res.labels_used));
    return res;
}

}  // namespace graphsym
