#pragma once

#include "oddcore/parity.hpp"

#include <bit>
#include <cassert>
#include <map>
#include <tuple>

namespace oddcore {

// A 2k-core certificate carries, per unordered pair {x,y} of core vertices,
// an even path of order <= 2k inside the core; strong certificates carry an
// odd path as well. Pair quantification is over unordered distinct pairs.
struct PairWitnesses {
    PathWitness even_path;
    std::optional<PathWitness> odd_path;
};

struct CoreCertificate {
    VertexSet core;
    int k = 0;
    bool strong = false;
    std::map<std::pair<Vertex, Vertex>, PairWitnesses> pair_witnesses; // key x < y
};

// Re-checks a certificate from scratch against the host graph.
inline bool validate_core_certificate(const Graph& g, const CoreCertificate& cert) {
    const auto& ids = cert.core.ids();
    if (ids.size() < 2 || cert.k < 1) return false;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            auto it = cert.pair_witnesses.find({ids[i], ids[j]});
            if (it == cert.pair_witnesses.end()) return false;
            const PairWitnesses& pw = it->second;
            auto inside_core = [&](const PathWitness& p) {
                for (Vertex v : p.vertices)
                    if (!cert.core.contains(v)) return false;
                return true;
            };
            if (!validate_path_witness(g, pw.even_path) ||
                pw.even_path.parity() != Parity::even ||
                pw.even_path.order() > 2 * cert.k || !inside_core(pw.even_path))
                return false;
            auto ok_ends = [&](const PathWitness& p) {
                return (p.front() == ids[i] && p.back() == ids[j]) ||
                       (p.front() == ids[j] && p.back() == ids[i]);
            };
            if (!ok_ends(pw.even_path)) return false;
            if (cert.strong) {
                if (!pw.odd_path) return false;
                if (!validate_path_witness(g, *pw.odd_path) ||
                    pw.odd_path->parity() != Parity::odd ||
                    pw.odd_path->order() > 2 * cert.k || !inside_core(*pw.odd_path) ||
                    !ok_ends(*pw.odd_path))
                    return false;
            }
        }
    }
    return true;
}

namespace detail {

inline std::optional<CoreCertificate> certify_core(const Graph& g, const VertexSet& h, int k,
                                                   bool strong, long long budget) {
    if (h.size() < 2) throw input_error("core certification needs |H| >= 2");
    if (k < 1) throw input_error("core certification needs k >= 1");
    auto sub = induced_subgraph(g, h);
    CoreCertificate cert;
    cert.core = h;
    cert.k = k;
    cert.strong = strong;
    long long used = 0;
    const int l = h.size();
    for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j < l; ++j) {
            PairWitnesses pw;
            auto even = parity_path_exists(sub.graph, i, j, Parity::even, 2 * k, {},
                                           budget - used);
            used += even.nodes_explored;
            if (even.exhausted_budget())
                throw budget_error("core certification ran out of budget");
            if (!even.found()) return std::nullopt;
            for (Vertex& v : even.witness->vertices) v = sub.to_parent[v];
            pw.even_path = std::move(*even.witness);
            if (strong) {
                auto odd = parity_path_exists(sub.graph, i, j, Parity::odd, 2 * k, {},
                                              budget - used);
                used += odd.nodes_explored;
                if (odd.exhausted_budget())
                    throw budget_error("core certification ran out of budget");
                if (!odd.found()) return std::nullopt;
                for (Vertex& v : odd.witness->vertices) v = sub.to_parent[v];
                pw.odd_path = std::move(*odd.witness);
            }
            cert.pair_witnesses.emplace(std::make_pair(sub.to_parent[i], sub.to_parent[j]),
                                        std::move(pw));
        }
    }
    return cert;
}

} // namespace detail

inline std::optional<CoreCertificate> certify_2k_core(const Graph& g, const VertexSet& h,
                                                      int k, long long budget = kDefaultBudget) {
    return detail::certify_core(g, h, k, false, budget);
}

inline std::optional<CoreCertificate> certify_strong_2k_core(const Graph& g, const VertexSet& h,
                                                             int k,
                                                             long long budget = kDefaultBudget) {
    return detail::certify_core(g, h, k, true, budget);
}

// The two extension patterns: an even path re-attached twice to one core
// vertex, or any path (possibly a single vertex) attached to two distinct
// core vertices.
enum class ExtensionPattern {
    single_anchor_even_path,
    two_anchor_path,
    two_anchor_single_vertex,
};

inline const char* to_string(ExtensionPattern p) {
    switch (p) {
    case ExtensionPattern::single_anchor_even_path: return "single_anchor_even_path";
    case ExtensionPattern::two_anchor_path: return "two_anchor_path";
    default: return "two_anchor_single_vertex";
    }
}

struct ExtensionStep {
    ExtensionPattern pattern;
    VertexList anchors; // 1 or 2 core vertices
    PathWitness path;   // lies outside the core
};

struct ExtensionSearchOutcome {
    SearchStatus status = SearchStatus::absent;
    std::optional<ExtensionStep> step;
    long long nodes_explored = 0;

    bool exhausted_budget() const { return status == SearchStatus::budget_exceeded; }
};

namespace detail {

// Enumerates simple paths of a fixed order in the outside graph in
// lexicographic order and reports the first path admitting each pattern.
struct OutsidePathScan {
    const Graph& g_out;
    const std::vector<VertexList>& h_neighbors; // per outside vertex, in host ids
    int order;
    long long budget;
    long long nodes = 0;
    bool exceeded = false;

    std::optional<std::pair<VertexList, std::pair<Vertex, Vertex>>> first_two_anchor;
    std::optional<std::pair<VertexList, Vertex>> first_single_anchor;

    std::vector<char> on_path;
    VertexList path;

    OutsidePathScan(const Graph& out, const std::vector<VertexList>& hn, int ord, long long b)
        : g_out(out), h_neighbors(hn), order(ord), budget(b),
          on_path(out.vertex_count(), 0) {}

    void run() {
        for (Vertex s = 0; s < g_out.vertex_count() && !done(); ++s) {
            path.assign(1, s);
            on_path[s] = 1;
            dfs(s, 1);
            on_path[s] = 0;
            if (exceeded) return;
        }
    }

    // the two-anchor pattern takes precedence, so finding one ends the scan
    bool done() const { return first_two_anchor.has_value(); }

    void consider(Vertex u_local, Vertex v_local) {
        const VertexList& nu = h_neighbors[u_local];
        const VertexList& nv = h_neighbors[v_local];
        if (!first_two_anchor && !nu.empty() && !nv.empty()) {
            std::optional<std::pair<Vertex, Vertex>> anchors;
            if (nu.front() != nv.front()) {
                anchors = {nu.front(), nv.front()};
            } else if (nv.size() >= 2) {
                anchors = {nu.front(), nv[1]};
            } else if (nu.size() >= 2) {
                anchors = {nu[1], nv.front()};
            }
            if (anchors) first_two_anchor = {path, *anchors};
        }
        if (!first_single_anchor && order % 2 == 0) {
            // lowest common core neighbor of the two endpoints
            std::size_t a = 0, b = 0;
            while (a < nu.size() && b < nv.size()) {
                if (nu[a] == nv[b]) {
                    first_single_anchor = {path, nu[a]};
                    break;
                }
                if (nu[a] < nv[b]) ++a;
                else ++b;
            }
        }
    }

    void dfs(Vertex v, int t) {
        if (++nodes > budget) {
            exceeded = true;
            return;
        }
        if (t == order) {
            if (path.front() < path.back() || order == 1) consider(path.front(), path.back());
            return;
        }
        for (Vertex u : g_out.neighbors(v)) {
            if (on_path[u]) continue;
            on_path[u] = 1;
            path.push_back(u);
            dfs(u, t + 1);
            path.pop_back();
            on_path[u] = 0;
            if (exceeded || done()) return;
        }
    }
};

} // namespace detail

// Searches for an applicable extension of a certified strong-2k-core,
// smallest path order first; within an order, the two-anchor pattern is
// preferred and ties break toward lowest vertex ids.
inline ExtensionSearchOutcome find_extension(const Graph& g, const VertexSet& h, int k,
                                             long long budget = kDefaultBudget) {
    // the budget governs the extension scan; precondition checking is cheap
    // and always runs in full
    auto cert = certify_strong_2k_core(g, h, k);
    if (!cert)
        throw input_error("find_extension: H is not a certified strong-2k-core");
    const int l = h.size();
    if (l > 2 * k - 2)
        throw input_error("find_extension: extension rules need |H| <= 2k-2");

    VertexList outside;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!h.contains(v)) outside.push_back(v);
    auto sub = induced_subgraph(g, VertexSet(outside));

    std::vector<VertexList> h_neighbors(sub.graph.vertex_count());
    for (Vertex local = 0; local < sub.graph.vertex_count(); ++local)
        for (Vertex w : g.neighbors(sub.to_parent[local]))
            if (h.contains(w)) h_neighbors[local].push_back(w);

    ExtensionSearchOutcome out;
    const int max_order = 2 * k - l;
    for (int order = 1; order <= max_order; ++order) {
        detail::OutsidePathScan scan(sub.graph, h_neighbors, order, budget - out.nodes_explored);
        scan.run();
        out.nodes_explored += scan.nodes;
        if (scan.exceeded) {
            out.status = SearchStatus::budget_exceeded;
            return out;
        }
        auto to_parent_path = [&](const VertexList& local) {
            PathWitness p;
            for (Vertex v : local) p.vertices.push_back(sub.to_parent[v]);
            return p;
        };
        if (scan.first_two_anchor) {
            auto& [local_path, anchors] = *scan.first_two_anchor;
            ExtensionStep step;
            step.pattern = order == 1 ? ExtensionPattern::two_anchor_single_vertex
                                      : ExtensionPattern::two_anchor_path;
            step.anchors = {anchors.first, anchors.second};
            step.path = to_parent_path(local_path);
            out.status = SearchStatus::found;
            out.step = std::move(step);
            return out;
        }
        if (scan.first_single_anchor) {
            auto& [local_path, anchor] = *scan.first_single_anchor;
            ExtensionStep step;
            step.pattern = ExtensionPattern::single_anchor_even_path;
            step.anchors = {anchor};
            step.path = to_parent_path(local_path);
            out.status = SearchStatus::found;
            out.step = std::move(step);
            return out;
        }
    }
    out.status = SearchStatus::absent;
    return out;
}

inline VertexSet apply_extension(const Graph& g, const VertexSet& h, const ExtensionStep& step,
                                 int k) {
    if (!validate_path_witness(g, step.path))
        throw input_error("apply_extension: step path is not a valid simple path");
    for (Vertex v : step.path.vertices)
        if (h.contains(v))
            throw input_error("apply_extension: step path intersects the core");
    if (step.path.order() > 2 * k - h.size())
        throw input_error("apply_extension: path order exceeds 2k - |H|");
    for (Vertex a : step.anchors)
        if (!h.contains(a))
            throw input_error("apply_extension: anchor outside the core");

    switch (step.pattern) {
    case ExtensionPattern::single_anchor_even_path:
        if (step.anchors.size() != 1 || step.path.parity() != Parity::even ||
            !g.has_edge(step.anchors[0], step.path.front()) ||
            !g.has_edge(step.anchors[0], step.path.back()))
            throw input_error("apply_extension: invalid single-anchor step");
        break;
    case ExtensionPattern::two_anchor_path:
        if (step.anchors.size() != 2 || step.anchors[0] == step.anchors[1] ||
            step.path.order() < 2 ||
            !g.has_edge(step.anchors[0], step.path.front()) ||
            !g.has_edge(step.anchors[1], step.path.back()))
            throw input_error("apply_extension: invalid two-anchor step");
        break;
    case ExtensionPattern::two_anchor_single_vertex:
        if (step.anchors.size() != 2 || step.anchors[0] == step.anchors[1] ||
            step.path.order() != 1 ||
            !g.has_edge(step.anchors[0], step.path.front()) ||
            !g.has_edge(step.anchors[1], step.path.front()))
            throw input_error("apply_extension: invalid single-vertex step");
        break;
    }
    VertexSet grown = h;
    for (Vertex v : step.path.vertices) grown.insert(v);
#ifndef NDEBUG
    assert(certify_strong_2k_core(g, grown, k).has_value());
#endif
    return grown;
}

struct GreedyCoreResult {
    bool seeded = false;
    std::string diagnostic; // set when no seed exists
    VertexSet core;
    std::vector<ExtensionStep> trace;
    bool budget_exhausted = false;
    long long nodes_explored = 0;
};

// Seeds with a shortest odd cycle (a strong-2k-core whenever its length is
// at most 2k-1) and applies extension steps until none applies.
inline GreedyCoreResult greedy_max_strong_core(const Graph& g, int k,
                                               long long budget = kDefaultBudget) {
    GreedyCoreResult res;
    auto og = odd_girth(g);
    if (!og) {
        res.diagnostic = "no seed: graph is bipartite";
        return res;
    }
    if (og->length > 2 * k - 1) {
        res.diagnostic = "no seed: odd girth " + std::to_string(og->length) +
                         " exceeds 2k-1 = " + std::to_string(2 * k - 1);
        return res;
    }
    res.seeded = true;
    res.core = VertexSet(og->witness.vertices);
    while (res.core.size() <= 2 * k - 2) {
        auto ext = find_extension(g, res.core, k, budget - res.nodes_explored);
        res.nodes_explored += ext.nodes_explored;
        if (ext.exhausted_budget()) {
            res.budget_exhausted = true;
            break;
        }
        if (!ext.step) break;
        res.core = apply_extension(g, res.core, *ext.step, k);
        res.trace.push_back(std::move(*ext.step));
    }
    return res;
}

namespace detail {

inline bool mask_connected(const std::vector<unsigned>& adj, unsigned mask) {
    unsigned start = mask & (~mask + 1u);
    unsigned reach = start, frontier = start;
    while (frontier) {
        unsigned next = 0;
        unsigned f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v] & mask & ~reach;
        }
        reach |= next;
        frontier = next;
    }
    return reach == mask;
}

inline bool mask_bipartite(const std::vector<unsigned>& adj, unsigned mask) {
    unsigned colored = 0, side0 = 0, side1 = 0;
    unsigned todo = mask;
    while (todo) {
        unsigned root = todo & (~todo + 1u);
        side0 |= root;
        colored |= root;
        unsigned frontier = root;
        bool odd_layer = true;
        while (frontier) {
            unsigned next = 0;
            unsigned f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[v] & mask & ~colored;
            }
            if (odd_layer) side1 |= next;
            else side0 |= next;
            colored |= next;
            frontier = next;
            odd_layer = !odd_layer;
        }
        // verify both sides independent
        todo = mask & ~colored;
    }
    unsigned f = side0;
    while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        if (adj[v] & side0) return false;
    }
    f = side1;
    while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        if (adj[v] & side1) return false;
    }
    return true;
}

// Exhaustive maximum-core oracle over vertex subsets, n <= 16. Subsets are
// screened by cheap necessary conditions (connected, non-bipartite, and for
// strong cores minimum internal degree 2) before full certification.
inline VertexSet exact_maximum_core_impl(const Graph& g, int k, bool strong) {
    const int n = g.vertex_count();
    if (n > 16)
        throw input_error("exact core oracle is limited to n <= 16");
    if (k < 1) throw input_error("exact core oracle needs k >= 1");
    std::vector<unsigned> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v)) adj[v] |= 1u << u;

    for (int size = n; size >= 3; --size) {
        unsigned mask = (1u << size) - 1;
        const unsigned limit = 1u << n;
        while (mask < limit) {
            if (mask_connected(adj, mask) && !mask_bipartite(adj, mask)) {
                bool degree_ok = true;
                if (strong) {
                    unsigned f = mask;
                    while (f) {
                        int v = std::countr_zero(f);
                        f &= f - 1;
                        if (std::popcount(adj[v] & mask) < 2) {
                            degree_ok = false;
                            break;
                        }
                    }
                }
                if (degree_ok) {
                    VertexList ids;
                    unsigned f = mask;
                    while (f) {
                        int v = std::countr_zero(f);
                        f &= f - 1;
                        ids.push_back(v);
                    }
                    VertexSet h(std::move(ids));
                    auto cert = certify_core(g, h, k, strong, kDefaultBudget);
                    if (cert) return h;
                }
            }
            unsigned c = mask & (~mask + 1u);
            unsigned r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return {};
}

} // namespace detail

// Maximum-cardinality strong-2k-core by subset enumeration. Cores of size
// below 3 are not reported (a lone edge never carries an odd path).
inline VertexSet exact_maximum_strong_core(const Graph& g, int k) {
    return detail::exact_maximum_core_impl(g, k, true);
}

inline VertexSet exact_maximum_2k_core(const Graph& g, int k) {
    return detail::exact_maximum_core_impl(g, k, false);
}

} // namespace oddcore
