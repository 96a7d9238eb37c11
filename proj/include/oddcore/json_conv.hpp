#pragma once

#include "oddcore/cores.hpp"
#include "oddcore/coloring.hpp"
#include "oddcore/edge_list.hpp"

#include <json.hpp>

namespace oddcore {

inline void to_json(nlohmann::json& j, const PathWitness& p) {
    j = nlohmann::json{{"vertices", p.vertices}, {"order", p.order()},
                       {"parity", to_string(p.parity())}};
}

inline void to_json(nlohmann::json& j, const CycleWitness& c) {
    j = nlohmann::json{{"vertices", c.vertices}, {"length", c.length()}};
}

inline void to_json(nlohmann::json& j, const VertexSet& s) { j = s.ids(); }

inline void to_json(nlohmann::json& j, const ColoringCertificate& c) {
    j = nlohmann::json{{"colors", c.colors}, {"color_count", c.color_count}};
}

inline void to_json(nlohmann::json& j, const ExtensionStep& step) {
    j = nlohmann::json{{"pattern", to_string(step.pattern)},
                       {"anchors", step.anchors},
                       {"path", step.path}};
}

inline nlohmann::json graph_summary_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return nlohmann::json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
}

} // namespace oddcore
