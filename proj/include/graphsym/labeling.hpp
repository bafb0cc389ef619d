#pragma once

#include <stdexcept>
#include <vector>

#include "graphsym/automorphism.hpp"
#include "graphsym/graph.hpp"

namespace graphsym {

enum class LabelingKind { vertex, edge, total };

// Labels lie in 1..d; vertex_labels indexed by vertex id, edge_labels by
// canonical edge index. The populated domains match `kind` exactly.
struct Labeling {
    LabelingKind kind = LabelingKind::vertex;
    int d = 1;
    std::vector<int> vertex_labels;
    std::vector<int> edge_labels;

    static Labeling vertex(int d, std::vector<int> labels) {
        Labeling l;
        l.kind = LabelingKind::vertex;
        l.d = d;
        l.vertex_labels = std::move(labels);
        return l;
    }
    static Labeling edge(int d, std::vector<int> labels) {
        Labeling l;
        l.kind = LabelingKind::edge;
        l.d = d;
        l.edge_labels = std::move(labels);
        return l;
    }
    static Labeling total(int d, std::vector<int> vlabels, std::vector<int> elabels) {
        Labeling l;
        l.kind = LabelingKind::total;
        l.d = d;
        l.vertex_labels = std::move(vlabels);
        l.edge_labels = std::move(elabels);
        return l;
    }

    bool uses_vertices() const { return kind != LabelingKind::edge; }
    bool uses_edges() const { return kind != LabelingKind::vertex; }

    int labels_used() const {
        int m = 0;
        for (int x : vertex_labels) m = std::max(m, x);
        for (int x : edge_labels) m = std::max(m, x);
        return m;
    }
};

inline void validate_labeling(const Graph& g, const Labeling& l) {
    auto check_range = [&](const std::vector<int>& xs) {
        for (int x : xs)
            if (x < 1 || x > l.d)
                throw std::invalid_argument("labeling: label out of range 1..d");
    };
    if (l.uses_vertices()) {
        if (static_cast<int>(l.vertex_labels.size()) != g.vertex_count())
            throw std::invalid_argument("labeling: incomplete vertex label domain");
        check_range(l.vertex_labels);
    } else if (!l.vertex_labels.empty()) {
        throw std::invalid_argument("labeling: unexpected vertex labels for edge kind");
    }
    if (l.uses_edges()) {
        if (static_cast<int>(l.edge_labels.size()) != g.edge_count())
            throw std::invalid_argument("labeling: incomplete edge label domain");
        check_range(l.edge_labels);
    } else if (!l.edge_labels.empty()) {
        throw std::invalid_argument("labeling: unexpected edge labels for vertex kind");
    }
}

namespace detail {

inline bool preserves_labeling(const Graph& g, const Permutation& p, const Labeling& l) {
    if (l.uses_vertices()) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (l.vertex_labels[p(v)] != l.vertex_labels[v]) return false;
    }
    if (l.uses_edges()) {
        auto act = edge_action(g, p);
        for (std::size_t e = 0; e < act.size(); ++e)
            if (l.edge_labels[act[e]] != l.edge_labels[e]) return false;
    }
    return true;
}

}  // namespace detail

// Subset of auts preserving every label of l.
inline AutomorphismSet labeling_stabilizer(const AutomorphismSet& auts, const Labeling& l,
                                           const Graph& g) {
    validate_labeling(g, l);
    AutomorphismSet out;
    for (const auto& p : auts.elements)
        if (detail::preserves_labeling(g, p, l)) out.elements.push_back(p);
    return out;
}

// True iff the only automorphism preserving l is the identity.
inline bool is_distinguishing(const Graph& g, const AutomorphismSet& auts, const Labeling& l) {
    validate_labeling(g, l);
    for (const auto& p : auts.elements) {
        if (p.is_identity()) continue;
        if (detail::preserves_labeling(g, p, l)) return false;
    }
    return true;
}

}  // namespace graphsym
