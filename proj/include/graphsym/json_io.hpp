#pragma once

#include <string>

#include <json.hpp>

#include "graphsym/automorphism.hpp"
#include "graphsym/graph6.hpp"
#include "graphsym/labeling.hpp"
#include "graphsym/power.hpp"

namespace graphsym {

using Json = nlohmann::json;

inline const char* to_string(LabelingKind k) {
    switch (k) {
        case LabelingKind::vertex: return "vertex";
        case LabelingKind::edge: return "edge";
        default: return "total";
    }
}

inline Json labeling_to_json(const Labeling& l) {
    Json j;
    j["kind"] = to_string(l.kind);
    j["d"] = l.d;
    if (l.uses_vertices()) j["vertex_labels"] = l.vertex_labels;
    if (l.uses_edges()) j["edge_labels"] = l.edge_labels;
    return j;
}

// Sidecar for subdivision output: one record per original edge.
inline Json superedges_to_json(const SubdividedGraph& sg) {
    Json arr = Json::array();
    for (const auto& se : sg.superedges) {
        Json rec;
        rec["edge"] = {se.u, se.v};
        rec["internal"] = se.internal;
        arr.push_back(std::move(rec));
    }
    return arr;
}

inline Json automorphisms_to_json(const AutomorphismSet& auts) {
    Json arr = Json::array();
    for (const auto& p : auts.elements) arr.push_back(p.image);
    return arr;
}

}  // namespace graphsym
