#pragma once

#include "oddcore/bipartization.hpp"
#include "oddcore/constructions.hpp"
#include "oddcore/json_conv.hpp"

#include <bit>
#include <climits>
#include <cmath>
#include <future>
#include <numeric>
#include <random>

namespace oddcore {

inline int f_of_r(int r) {
    if (r < 2) throw input_error("f(r) is defined for r >= 2");
    return r == 2 ? 2 * r + 1 : 3 * r + 4;
}

// 108 * base^exp * k, saturating instead of overflowing. A saturated
// threshold simply classifies every feasible n as below-regime.
inline long long saturating_regime_threshold(long long base, int exp, long long k) {
    unsigned __int128 t = 108;
    for (int i = 0; i < exp; ++i) {
        t *= static_cast<unsigned __int128>(base);
        if (t > static_cast<unsigned __int128>(LLONG_MAX)) return LLONG_MAX;
    }
    t *= static_cast<unsigned __int128>(k);
    if (t > static_cast<unsigned __int128>(LLONG_MAX)) return LLONG_MAX;
    return static_cast<long long>(t);
}

// Degree floors compare by cross-multiplication; no floating point.
inline bool meets_degree_floor(const Graph& g, long long denominator) {
    if (g.vertex_count() == 0) return false;
    return static_cast<long long>(min_degree(g)) * denominator >= g.vertex_count();
}

enum class CheckStatus { pass, fail, skipped };
enum class Conclusion { pass, fail, not_applicable, inconclusive };

inline const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
    }
}

inline const char* to_string(Conclusion c) {
    switch (c) {
    case Conclusion::pass: return "pass";
    case Conclusion::fail: return "fail";
    case Conclusion::not_applicable: return "not-applicable";
    default: return "inconclusive";
    }
}

struct NamedCheck {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string detail;
};

// Three verdict tiers: a failed conclusion only refutes anything when the
// regime thresholds hold; below them it is an observation, and failed
// applicability preconditions make the target silent entirely.
struct VerificationReport {
    std::string target;
    std::vector<NamedCheck> preconditions;
    std::vector<NamedCheck> regime;
    Conclusion conclusion = Conclusion::not_applicable;
    std::string notes;
    nlohmann::json details = nlohmann::json::object();

    bool applicable() const {
        for (const auto& c : preconditions)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }

    bool in_regime() const {
        for (const auto& c : regime)
            if (c.status != CheckStatus::pass) return false;
        return true;
    }

    std::string tier() const {
        if (conclusion == Conclusion::inconclusive) return "inconclusive";
        if (!applicable()) return "not-applicable";
        return in_regime() ? "in-regime" : "below-regime-observation";
    }
};

inline nlohmann::json report_to_json(const VerificationReport& r) {
    auto checks = [](const std::vector<NamedCheck>& cs) {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& c : cs) {
            j[c.name] = c.detail.empty()
                            ? nlohmann::json(to_string(c.status))
                            : nlohmann::json{{"status", to_string(c.status)},
                                             {"detail", c.detail}};
        }
        return j;
    };
    return nlohmann::json{{"target", r.target},
                          {"preconditions", checks(r.preconditions)},
                          {"regime", checks(r.regime)},
                          {"conclusion", to_string(r.conclusion)},
                          {"tier", r.tier()},
                          {"notes", r.notes},
                          {"details", r.details}};
}

namespace detail {

inline CheckStatus bool_check(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

// Shared precondition: C_{2k+1}-freeness with an explicit witness on failure.
// Returns false when the budget ran out (caller reports inconclusive).
inline bool add_freeness_precondition(VerificationReport& rep, const Graph& g, int k,
                                      long long budget, long long& nodes) {
    auto res = contains_cycle_of_length(g, 2 * k + 1, budget);
    nodes += res.nodes_explored;
    NamedCheck check{"c2k1_free", CheckStatus::skipped,
                     "no C_" + std::to_string(2 * k + 1)};
    if (res.exhausted_budget()) {
        check.detail = "freeness search exceeded its budget";
        rep.preconditions.push_back(std::move(check));
        rep.conclusion = Conclusion::inconclusive;
        return false;
    }
    if (res.found()) {
        check.status = CheckStatus::fail;
        check.detail = "contains C_" + std::to_string(2 * k + 1);
        rep.details["violating_cycle"] = *res.witness;
    } else {
        check.status = CheckStatus::pass;
    }
    rep.preconditions.push_back(std::move(check));
    return true;
}

inline void add_degree_floor_precondition(VerificationReport& rep, const Graph& g,
                                          long long denominator) {
    bool ok = meets_degree_floor(g, denominator);
    rep.preconditions.push_back(
        {"degree_floor", bool_check(ok),
         "min degree " + std::to_string(g.vertex_count() ? min_degree(g) : 0) + " * " +
             std::to_string(denominator) + (ok ? " >= n" : " < n")});
}

inline void add_regime_checks(VerificationReport& rep, int k, int k_floor, long long n,
                              long long base, int exp) {
    rep.regime.push_back({"k_threshold", bool_check(k >= k_floor),
                          "k = " + std::to_string(k) + ", needs >= " + std::to_string(k_floor)});
    long long n_floor = saturating_regime_threshold(base, exp, k);
    rep.regime.push_back({"n_threshold", bool_check(n >= n_floor),
                          "n = " + std::to_string(n) + ", needs >= " + std::to_string(n_floor)});
}

} // namespace detail

// |(N(x) cap N(y)) \ V(P)| <= 15r for any even path P of order at most 2k.
inline VerificationReport check_common_neighborhood_bound(const Graph& g, const PathWitness& path,
                                                          int r, int k,
                                                          long long budget = kDefaultBudget) {
    if (!validate_path_witness(g, path) || path.parity() != Parity::even)
        throw input_error("check_common_neighborhood_bound: not a valid even path");
    if (path.order() > 2 * k)
        throw input_error("check_common_neighborhood_bound: path order exceeds 2k");
    VerificationReport rep;
    rep.target = "lemma-common-neighborhood";
    long long nodes = 0;
    if (!detail::add_freeness_precondition(rep, g, k, budget, nodes)) return rep;
    detail::add_degree_floor_precondition(rep, g, 2LL * r + 2);
    detail::add_regime_checks(rep, k, f_of_r(r), g.vertex_count(), r + 1, r);

    Vertex x = path.front(), y = path.back();
    std::vector<char> on_path(g.vertex_count(), 0);
    for (Vertex v : path.vertices) on_path[v] = 1;
    int common = 0;
    for (Vertex v : g.neighbors(x))
        if (!on_path[v] && g.has_edge(v, y)) ++common;
    rep.details["common_neighbors_off_path"] = common;
    rep.details["bound"] = 15 * r;
    if (rep.applicable())
        rep.conclusion = common <= 15 * r ? Conclusion::pass : Conclusion::fail;
    else
        rep.conclusion = Conclusion::not_applicable;
    return rep;
}

// Size bounds: 2k-cores have at most 2r+2 vertices, strong-2k-cores at most
// r+1. Exact maxima for n <= 16, greedy lower bound beyond.
inline VerificationReport check_core_size_bounds(const Graph& g, int r, int k,
                                                 long long budget = kDefaultBudget) {
    VerificationReport rep;
    rep.target = "core-size-bounds";
    long long nodes = 0;
    if (!detail::add_freeness_precondition(rep, g, k, budget, nodes)) return rep;
    detail::add_degree_floor_precondition(rep, g, 2LL * r + 2);
    detail::add_regime_checks(rep, k, f_of_r(r), g.vertex_count(), r + 1, r);

    bool ok = true;
    if (g.vertex_count() <= 16) {
        VertexSet strong = exact_maximum_strong_core(g, k);
        VertexSet core = exact_maximum_2k_core(g, k);
        rep.details["max_strong_core"] = strong;
        rep.details["max_strong_core_size"] = strong.size();
        rep.details["max_core"] = core;
        rep.details["max_core_size"] = core.size();
        rep.details["method"] = "exact";
        ok = strong.size() <= r + 1 && core.size() <= 2 * r + 2;
        rep.details["strong_bound"] = r + 1;
        rep.details["core_bound"] = 2 * r + 2;
    } else {
        auto greedy = greedy_max_strong_core(g, k, budget - nodes);
        nodes += greedy.nodes_explored;
        if (greedy.budget_exhausted) {
            rep.conclusion = Conclusion::inconclusive;
            rep.notes = "greedy core extraction exceeded its budget";
            return rep;
        }
        rep.details["method"] = "greedy";
        rep.details["greedy_strong_core"] = greedy.core;
        rep.details["greedy_strong_core_size"] = greedy.core.size();
        rep.details["strong_bound"] = r + 1;
        ok = greedy.core.size() <= r + 1;
        rep.notes = "greedy extraction yields a lower bound on the maximum strong core; "
                    "the 2k-core bound is not evaluated at this size";
    }
    rep.conclusion = !rep.applicable() ? Conclusion::not_applicable
                                       : (ok ? Conclusion::pass : Conclusion::fail);
    return rep;
}

// Non-bipartite graphs meeting the degree floor contain an odd cycle of
// length at most 2(2r+1)+1. No n-threshold.
inline VerificationReport check_shortest_odd_cycle_bound(const Graph& g, int r) {
    VerificationReport rep;
    rep.target = "shortest-odd-cycle";
    auto og = odd_girth(g);
    rep.preconditions.push_back({"non_bipartite", detail::bool_check(og.has_value()),
                                 og ? "" : "graph is bipartite"});
    detail::add_degree_floor_precondition(rep, g, 2LL * r + 2);
    if (!rep.applicable()) {
        rep.conclusion = Conclusion::not_applicable;
        return rep;
    }
    int bound = 2 * (2 * r + 1) + 1;
    rep.details["odd_girth"] = og->length;
    rep.details["bound"] = bound;
    rep.details["witness"] = og->witness;
    rep.conclusion = og->length <= bound ? Conclusion::pass : Conclusion::fail;
    return rep;
}

struct NeighborhoodLayers {
    Vertex x;
    VertexList first;  // N_i  = N(x_i) \ V(H)
    VertexList second; // N_i1 = N(N_i)
    VertexList third;  // N_i2 = N(N_i1) \ V(H)
};

inline std::vector<NeighborhoodLayers> neighborhood_layers(const Graph& g, const VertexSet& h) {
    std::vector<NeighborhoodLayers> layers;
    auto union_neighbors = [&](const VertexList& vs) {
        std::vector<char> seen(g.vertex_count(), 0);
        for (Vertex v : vs)
            for (Vertex u : g.neighbors(v)) seen[u] = 1;
        VertexList out;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (seen[v]) out.push_back(v);
        return out;
    };
    for (Vertex x : h) {
        NeighborhoodLayers layer;
        layer.x = x;
        for (Vertex u : g.neighbors(x))
            if (!h.contains(u)) layer.first.push_back(u);
        layer.second = union_neighbors(layer.first);
        VertexList n2 = union_neighbors(layer.second);
        for (Vertex v : n2)
            if (!h.contains(v)) layer.third.push_back(v);
        layers.push_back(std::move(layer));
    }
    return layers;
}

namespace detail {

inline bool independent_set(const Graph& g, const VertexList& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) return false;
    return true;
}

inline bool complete_between(const Graph& g, const VertexList& a, const VertexList& b) {
    for (Vertex u : a)
        for (Vertex v : b)
            if (!g.has_edge(u, v)) return false;
    return true;
}

} // namespace detail

// Structure around a maximum strong core: with l = r+1 the layers N_i1, N_i2
// are independent, have exactly n/(2r+2) vertices each, and span a complete
// bipartite graph; with l <= r each core vertex is a cut vertex.
inline VerificationReport check_structure_lemma(const Graph& g, const VertexSet& h, int r, int k,
                                                long long budget = kDefaultBudget) {
    if (h.size() < 3)
        throw input_error("check_structure_lemma: needs |H| >= 3");
    if (!certify_strong_2k_core(g, h, k, budget))
        throw input_error("check_structure_lemma: H is not a certified strong-2k-core");
    VerificationReport rep;
    rep.target = "structure-lemma";
    long long nodes = 0;
    if (!detail::add_freeness_precondition(rep, g, k, budget, nodes)) return rep;
    detail::add_degree_floor_precondition(rep, g, 2LL * r + 2);
    detail::add_regime_checks(rep, k, f_of_r(r), g.vertex_count(), r + 1, r);
    rep.notes = "maximality of H is assumed, not verified";

    const int l = h.size();
    rep.details["l"] = l;
    rep.details["r"] = r;
    bool ok = true;
    if (l == r + 1) {
        rep.details["case"] = "i";
        long long n = g.vertex_count();
        auto layers = neighborhood_layers(g, h);
        nlohmann::json per_vertex = nlohmann::json::array();
        for (const auto& layer : layers) {
            bool indep1 = detail::independent_set(g, layer.second);
            bool indep2 = detail::independent_set(g, layer.third);
            bool size1 = static_cast<long long>(layer.second.size()) * (2 * r + 2) == n;
            bool size2 = static_cast<long long>(layer.third.size()) * (2 * r + 2) == n;
            VertexList n1 = layer.second, n2 = layer.third;
            std::sort(n1.begin(), n1.end());
            std::sort(n2.begin(), n2.end());
            VertexList overlap;
            std::set_intersection(n1.begin(), n1.end(), n2.begin(), n2.end(),
                                  std::back_inserter(overlap));
            bool disjoint = overlap.empty();
            bool complete = disjoint && detail::complete_between(g, layer.second, layer.third);
            per_vertex.push_back({{"x", layer.x},
                                  {"N1_size", layer.second.size()},
                                  {"N2_size", layer.third.size()},
                                  {"N1_independent", indep1},
                                  {"N2_independent", indep2},
                                  {"layers_disjoint", disjoint},
                                  {"complete_bipartite", complete}});
            ok = ok && indep1 && indep2 && size1 && size2 && disjoint && complete;
        }
        rep.details["layers"] = std::move(per_vertex);
    } else if (l <= r) {
        rep.details["case"] = "ii";
        rep.preconditions.push_back({"connected", detail::bool_check(is_connected(g)),
                                     "cut-vertex case needs a connected graph"});
        if (!rep.applicable()) {
            rep.conclusion = Conclusion::not_applicable;
            return rep;
        }
        nlohmann::json per_vertex = nlohmann::json::array();
        for (Vertex x : h) {
            bool cut = is_cut_vertex(g, x);
            per_vertex.push_back({{"x", x}, {"cut_vertex", cut}});
            ok = ok && cut;
        }
        rep.details["cut_vertices"] = std::move(per_vertex);
    } else {
        rep.details["case"] = "none";
        rep.notes = "core size l exceeds r+1, contradicting the size bound";
        ok = false;
    }
    rep.conclusion = !rep.applicable() ? Conclusion::not_applicable
                                       : (ok ? Conclusion::pass : Conclusion::fail);
    return rep;
}

struct RecognitionResult {
    bool matches = false;
    VertexList map; // map[v in the input] = vertex id in the canonical layout
};

namespace detail {

// Shared recognizer for the blob constructions: `blobs` mutually reachable
// cut vertices (forming a clique, or a cycle for the BC family), whose
// removal leaves one balanced complete bipartite blob per cut vertex.
inline RecognitionResult recognize_blob_construction(const Graph& g, int blobs,
                                                     bool selected_clique) {
    RecognitionResult res;
    const int n = g.vertex_count();
    if (blobs < 2 || n <= 0 || n % (2 * blobs) != 0) return res;
    const int s = n / (2 * blobs);
    if (!is_connected(g)) return res;
    auto cuts = cut_vertices(g);
    if (static_cast<int>(cuts.size()) != blobs) return res;
    VertexSet cut_set(cuts);

    // selected structure
    if (selected_clique) {
        for (std::size_t i = 0; i < cuts.size(); ++i)
            for (std::size_t j = i + 1; j < cuts.size(); ++j)
                if (!g.has_edge(cuts[i], cuts[j])) return res;
    } else {
        for (Vertex q : cuts) {
            int deg = 0;
            for (Vertex w : cuts)
                if (w != q && g.has_edge(q, w)) ++deg;
            if (deg != 2) return res;
        }
    }

    // one component per blob after removing the cut vertices
    VertexList rest;
    for (Vertex v = 0; v < n; ++v)
        if (!cut_set.contains(v)) rest.push_back(v);
    auto sub = induced_subgraph(g, VertexSet(rest));
    auto comps = connected_components(sub.graph);
    if (static_cast<int>(comps.size()) != blobs) return res;

    std::vector<VertexList> comp_of_cut(n);
    std::vector<char> cut_used(n, 0);
    std::vector<std::pair<VertexList, VertexList>> sides_of_cut(n); // (side with q, other)
    for (auto& comp : comps) {
        VertexList host_comp;
        for (Vertex local : comp) host_comp.push_back(sub.to_parent[local]);
        std::sort(host_comp.begin(), host_comp.end());
        Vertex attached = -1;
        for (Vertex q : cuts) {
            bool touches = false;
            for (Vertex v : host_comp)
                if (g.has_edge(q, v)) {
                    touches = true;
                    break;
                }
            if (touches) {
                if (attached != -1) return res; // touches two cut vertices
                attached = q;
            }
        }
        if (attached < 0 || cut_used[attached]) return res;
        cut_used[attached] = 1;

        VertexList blob = host_comp;
        blob.push_back(attached);
        auto blob_sub = induced_subgraph(g, VertexSet(blob));
        if (blob_sub.graph.vertex_count() != 2 * s) return res;
        auto bip = is_bipartite(blob_sub.graph);
        if (!bip.bipartite()) return res;
        VertexList side_q, side_other;
        for (Vertex local = 0; local < blob_sub.graph.vertex_count(); ++local) {
            Vertex host = blob_sub.to_parent[local];
            int q_side = -1;
            for (Vertex l2 = 0; l2 < blob_sub.graph.vertex_count(); ++l2)
                if (blob_sub.to_parent[l2] == attached) q_side = bip.coloring->side[l2];
            (bip.coloring->side[local] == q_side ? side_q : side_other).push_back(host);
        }
        if (static_cast<int>(side_q.size()) != s || static_cast<int>(side_other.size()) != s)
            return res;
        if (blob_sub.graph.edge_count() != static_cast<long long>(s) * s) return res;
        comp_of_cut[attached] = host_comp;
        sides_of_cut[attached] = {side_q, side_other};
    }

    // blob order: ascending cut id for the clique; a fixed walk around the
    // cycle for the BC family
    VertexList order;
    if (selected_clique) {
        order = cuts;
    } else {
        Vertex start = cuts.front();
        VertexList nbrs;
        for (Vertex w : cuts)
            if (w != start && g.has_edge(start, w)) nbrs.push_back(w);
        order.push_back(start);
        Vertex prev = start, cur = std::min(nbrs[0], nbrs[1]);
        while (cur != start) {
            order.push_back(cur);
            Vertex next = -1;
            for (Vertex w : cuts)
                if (w != prev && w != cur && g.has_edge(cur, w)) next = w;
            if (next < 0) return res; // not a single cycle
            prev = cur;
            cur = next;
        }
        if (static_cast<int>(order.size()) != blobs) return res;
    }

    VertexList map(n, -1);
    for (int i = 0; i < blobs; ++i) {
        Vertex q = order[i];
        int base = i * 2 * s;
        auto& [side_q, side_other] = sides_of_cut[q];
        map[q] = base;
        int slot = base + 1;
        for (Vertex v : side_q)
            if (v != q) map[v] = slot++;
        slot = base + s;
        for (Vertex v : side_other) map[v] = slot++;
    }

    Graph canonical = selected_clique ? g_construction(blobs - 1, n).graph
                                      : bc_construction((blobs - 1) / 2, n).graph;
    if (g.edge_count() != canonical.edge_count()) return res;
    for (const auto& [u, v] : g.edges())
        if (!canonical.has_edge(map[u], map[v])) return res;
    res.matches = true;
    res.map = std::move(map);
    return res;
}

} // namespace detail

inline RecognitionResult recognize_g_construction(const Graph& g, int r) {
    if (r < 1) return {};
    return detail::recognize_blob_construction(g, r + 1, true);
}

inline RecognitionResult recognize_bc_construction(const Graph& g, int p) {
    if (p < 1) return {};
    return detail::recognize_blob_construction(g, 2 * p + 1, 2 * p + 1 == 3);
}

// Theorem: C_{2k+1}-free with the degree floor implies r-partite or the
// extremal graph itself.
inline VerificationReport check_theorem_main(const Graph& g, int r, int k,
                                             long long budget = kDefaultBudget) {
    VerificationReport rep;
    rep.target = "theorem-main";
    rep.preconditions.push_back({"r_at_least_3", detail::bool_check(r >= 3), ""});
    long long nodes = 0;
    if (!detail::add_freeness_precondition(rep, g, k, budget, nodes)) return rep;
    detail::add_degree_floor_precondition(rep, g, 2LL * r + 2);
    if (r >= 3) detail::add_regime_checks(rep, k, 3 * r + 4, g.vertex_count(), r + 1, r);
    if (!rep.applicable()) {
        rep.conclusion = Conclusion::not_applicable;
        return rep;
    }
    auto partite = is_r_partite(g, r, budget - nodes);
    nodes += partite.nodes_explored;
    if (partite.status == SearchStatus::budget_exceeded) {
        rep.conclusion = Conclusion::inconclusive;
        rep.notes = "r-partiteness search exceeded its budget";
        return rep;
    }
    if (partite.partite) {
        rep.details["branch"] = "r-partite";
        rep.details["partition"] = *partite.partition;
        rep.conclusion = Conclusion::pass;
        return rep;
    }
    auto rec = recognize_g_construction(g, r);
    if (rec.matches) {
        rep.details["branch"] = "extremal-graph";
        rep.details["isomorphism"] = rec.map;
        rep.conclusion = Conclusion::pass;
        return rep;
    }
    rep.details["branch"] = "none";
    rep.conclusion = Conclusion::fail;
    return rep;
}

// Theorem: family-free with the degree floor implies bipartite or the BC
// extremal graph. Parameters p and k derive from the family.
inline VerificationReport check_theorem_main2(const Graph& g, const OddCycleFamily& family,
                                              long long budget = kDefaultBudget) {
    VerificationReport rep;
    rep.target = "theorem-main2";
    const int p = family.p();
    const int k = family.k();
    rep.details["p"] = p;
    rep.details["k"] = k;

    auto free = is_family_free(g, family, budget);
    NamedCheck check{"family_free", CheckStatus::skipped, ""};
    if (free.status == SearchStatus::budget_exceeded) {
        check.detail = "freeness search exceeded its budget";
        rep.preconditions.push_back(std::move(check));
        rep.conclusion = Conclusion::inconclusive;
        return rep;
    }
    if (free.status == SearchStatus::found) {
        check.status = CheckStatus::fail;
        check.detail = "contains C_" + std::to_string(*free.violated_length);
        rep.details["violating_cycle"] = *free.witness;
    } else {
        check.status = CheckStatus::pass;
    }
    rep.preconditions.push_back(std::move(check));
    detail::add_degree_floor_precondition(rep, g, 2LL * (2 * p + 1));
    detail::add_regime_checks(rep, k, 4 * p + 1, g.vertex_count(), 2 * p + 1, 2 * p);
    if (!rep.applicable()) {
        rep.conclusion = Conclusion::not_applicable;
        return rep;
    }
    auto bip = is_bipartite(g);
    if (bip.bipartite()) {
        rep.details["branch"] = "bipartite";
        rep.details["two_coloring"] = bip.coloring->side;
        rep.conclusion = Conclusion::pass;
        return rep;
    }
    auto rec = recognize_bc_construction(g, p);
    if (rec.matches) {
        rep.details["branch"] = "extremal-graph";
        rep.details["isomorphism"] = rec.map;
        rep.conclusion = Conclusion::pass;
        return rep;
    }
    rep.details["branch"] = "none";
    rep.conclusion = Conclusion::fail;
    return rep;
}

struct DeltaChiResult {
    bool exists = false;
    int numerator = -1; // best minimum degree among qualifying graphs
    int denominator = 0;
    std::optional<Graph> witness;
    long long graphs_checked = 0;
};

// Finite-n analogue of the chromatic profile: the largest delta(G)/n over
// family-free graphs on n vertices with chi(G) > c, by full enumeration over
// labeled graphs with degree pruning and canonical-form duplicate rejection.
inline DeltaChiResult exact_delta_chi(const OddCycleFamily& family, int c, int n) {
    if (n < 1 || n > 8)
        throw input_error("exact_delta_chi enumeration is limited to 1 <= n <= 8");
    if (c < 1) throw input_error("exact_delta_chi: need c >= 1");
    const int bits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> bit_edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) bit_edges.emplace_back(i, j);
    std::vector<unsigned> vertex_bits(n, 0);
    for (int b = 0; b < bits; ++b) {
        vertex_bits[bit_edges[b].first] |= 1u << b;
        vertex_bits[bit_edges[b].second] |= 1u << b;
    }
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::vector<int> bit_index(n * n, -1);
    for (int b = 0; b < bits; ++b) {
        auto [i, j] = bit_edges[b];
        bit_index[i * n + j] = bit_index[j * n + i] = b;
    }

    DeltaChiResult res;
    res.denominator = n;
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
        int delta = n;
        for (int v = 0; v < n; ++v)
            delta = std::min(delta, std::popcount(mask & vertex_bits[v]));
        if (delta <= res.numerator) continue;

        std::vector<Edge> edges;
        for (int b = 0; b < bits; ++b)
            if (mask & (1u << b)) edges.push_back(bit_edges[b]);
        Graph g = Graph::from_edge_list(n, edges);
        ++res.graphs_checked;
        if (!is_family_free(g, family).free()) continue;
        if (is_k_colorable(g, c).found()) continue; // chi <= c

        // isomorphism rejection: only the minimum adjacency code of each
        // class is recorded, so the duplicates are never re-counted
        bool canonical = true;
        for (const auto& perm : perms) {
            unsigned remapped = 0;
            for (int b = 0; b < bits; ++b)
                if (mask & (1u << b)) {
                    auto [i, j] = bit_edges[b];
                    remapped |= 1u << bit_index[perm[i] * n + perm[j]];
                }
            if (remapped < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;

        res.exists = true;
        res.numerator = delta;
        res.witness = std::move(g);
    }
    return res;
}

// ----- randomized counterexample search (below-regime exploration) -----

struct SearchConfig {
    int n = 0;
    int r = 3;
    int k = 13;
    std::optional<OddCycleFamily> family; // family mode targets theorem-main2
    std::uint64_t seed = 1;
    long long iterations = 0;
    int workers = 1;
    int max_logs = 10;
    long long budget = kDefaultBudget;
};

struct SearchIncumbent {
    long long iteration = 0;
    int proxy = 0;
    int chi = 0;
    Graph graph;
    VerificationReport report;
};

struct WorkerRunReport {
    std::uint64_t seed = 0;
    long long iterations = 0;
    long long accepted_moves = 0;
    long long rejected_moves = 0;
    int best_proxy = 0;
    int best_chi = 0;
    Graph best_graph;
    std::vector<SearchIncumbent> conclusion_failures;
};

struct CounterexampleSearchReport {
    std::vector<WorkerRunReport> runs;
};

namespace detail {

inline int chi_proxy(const Graph& g) {
    int clique = greedy_clique(g).size();
    if (clique <= 2 && !is_bipartite(g).bipartite()) return 3;
    return clique;
}

inline WorkerRunReport run_search_chain(const SearchConfig& cfg, std::uint64_t seed) {
    WorkerRunReport run;
    run.seed = seed;
    run.iterations = cfg.iterations;
    const int n = cfg.n;
    if (n < 3) throw input_error("counterexample search needs n >= 3");

    std::vector<int> forbidden_lengths =
        cfg.family ? cfg.family->lengths() : std::vector<int>{2 * cfg.k + 1};
    const long long floor_denom =
        cfg.family ? 2LL * (2 * cfg.family->p() + 1) : 2LL * cfg.r + 2;

    // start from the balanced complete bipartite graph: free of every odd
    // cycle and comfortably above any degree floor
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<int> deg(n, 0);
    int half = n / 2;
    for (int i = 0; i < half; ++i)
        for (int j = half; j < n; ++j) {
            adj[i][j] = adj[j][i] = 1;
            ++deg[i];
            ++deg[j];
        }

    auto build = [&]() {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adj[i][j]) edges.emplace_back(i, j);
        return Graph::from_edge_list(n, edges);
    };

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Graph current = build();
    int current_proxy = chi_proxy(current);
    run.best_proxy = current_proxy;
    run.best_graph = current;
    {
        auto chi = chromatic_number(current, cfg.budget);
        run.best_chi = chi.status == SearchStatus::found ? chi.chi : 0;
    }

    for (long long it = 0; it < cfg.iterations; ++it) {
        int u = pick(rng), v = pick(rng);
        if (u == v) {
            ++run.rejected_moves;
            continue;
        }
        bool removing = adj[u][v];
        if (removing) {
            // removal may only break the degree floor
            if ((deg[u] - 1) * floor_denom < n || (deg[v] - 1) * floor_denom < n) {
                ++run.rejected_moves;
                continue;
            }
        } else {
            // addition may only close a forbidden cycle through (u, v)
            bool closes = false;
            for (int L : forbidden_lengths) {
                if (exists_path_of_exact_order(current, u, v, L, cfg.budget).found()) {
                    closes = true;
                    break;
                }
            }
            if (closes) {
                ++run.rejected_moves;
                continue;
            }
        }

        adj[u][v] = adj[v][u] = removing ? 0 : 1;
        deg[u] += removing ? -1 : 1;
        deg[v] += removing ? -1 : 1;
        Graph candidate = build();
        int candidate_proxy = chi_proxy(candidate);

        double temperature = std::max(0.05, 2.0 * std::pow(0.9995, double(it)));
        bool accept = candidate_proxy >= current_proxy ||
                      unit(rng) < std::exp((candidate_proxy - current_proxy) / temperature);
        if (!accept) {
            adj[u][v] = adj[v][u] = removing ? 1 : 0;
            deg[u] += removing ? 1 : -1;
            deg[v] += removing ? 1 : -1;
            ++run.rejected_moves;
            continue;
        }
        current = std::move(candidate);
        current_proxy = candidate_proxy;
        ++run.accepted_moves;

        if (candidate_proxy > run.best_proxy) {
            run.best_proxy = candidate_proxy;
            auto chi = chromatic_number(current, cfg.budget);
            int exact_chi = chi.status == SearchStatus::found ? chi.chi : 0;
            VerificationReport rep =
                cfg.family ? check_theorem_main2(current, *cfg.family, cfg.budget)
                           : check_theorem_main(current, cfg.r, cfg.k, cfg.budget);
            if (exact_chi > run.best_chi) {
                run.best_chi = exact_chi;
                run.best_graph = current;
            }
            if (rep.conclusion == Conclusion::fail &&
                static_cast<int>(run.conclusion_failures.size()) < cfg.max_logs) {
                SearchIncumbent inc;
                inc.iteration = it;
                inc.proxy = candidate_proxy;
                inc.chi = exact_chi;
                inc.graph = current;
                inc.report = std::move(rep);
                run.conclusion_failures.push_back(std::move(inc));
            }
        }
    }
    return run;
}

} // namespace detail

// Edge-flip local search over graphs that keep the freeness constraint and
// the degree floor, maximizing a cheap chromatic proxy under simulated
// annealing. Logs, never asserts: below the regime the theorems are silent.
// Worker chains run independently on consecutive seeds and merge in seed
// order, so the report does not depend on scheduling.
inline CounterexampleSearchReport search_counterexamples(const SearchConfig& cfg) {
    CounterexampleSearchReport report;
    int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        report.runs.push_back(detail::run_search_chain(cfg, cfg.seed));
        return report;
    }
    std::vector<std::future<WorkerRunReport>> futures;
    futures.reserve(workers);
    for (int w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, detail::run_search_chain, cfg,
                                     cfg.seed + w));
    for (auto& f : futures) report.runs.push_back(f.get());
    return report;
}

} // namespace oddcore
