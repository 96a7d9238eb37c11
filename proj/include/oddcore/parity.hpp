#pragma once

#include "oddcore/graph.hpp"

#include <climits>
#include <utility>

namespace oddcore {

inline bool validate_path_witness(const Graph& g, const PathWitness& p) {
    const auto& vs = p.vertices;
    if (vs.empty()) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    for (Vertex v : vs) {
        if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (!g.has_edge(vs[i - 1], vs[i])) return false;
    return true;
}

inline bool validate_cycle_witness(const Graph& g, const CycleWitness& c) {
    if (c.length() < 3) return false;
    PathWitness as_path{c.vertices};
    return validate_path_witness(g, as_path) &&
           g.has_edge(c.vertices.back(), c.vertices.front());
}

// Finite set of odd cycle lengths with the paper-style derived parameters:
// C_{2p+1} is the shortest odd cycle NOT in the family, C_{2k+1} the longest
// in it.
class OddCycleFamily {
public:
    explicit OddCycleFamily(std::vector<int> lengths) : lengths_(std::move(lengths)) {
        if (lengths_.empty())
            throw input_error("odd cycle family must be non-empty");
        std::sort(lengths_.begin(), lengths_.end());
        lengths_.erase(std::unique(lengths_.begin(), lengths_.end()), lengths_.end());
        for (int L : lengths_)
            if (L < 3 || L % 2 == 0)
                throw input_error("odd cycle family: lengths must be odd and >= 3");
    }

    const std::vector<int>& lengths() const { return lengths_; }

    bool contains(int L) const {
        return std::binary_search(lengths_.begin(), lengths_.end(), L);
    }

    int p() const {
        int L = 3;
        while (contains(L)) L += 2;
        return (L - 1) / 2;
    }

    int k() const { return (lengths_.back() - 1) / 2; }

private:
    std::vector<int> lengths_;
};

namespace detail {

constexpr int kUnreached = INT_MAX;

// BFS on the parity-lifted (bipartite double cover) graph restricted to
// `allowed` vertices. dist[2v+q] = fewest edges of a source->v walk with
// q = edges mod 2. Source must be allowed.
inline std::vector<int> parity_distances(const Graph& g, Vertex source,
                                         const std::vector<char>& allowed) {
    const int n = g.vertex_count();
    std::vector<int> dist(2 * n, kUnreached);
    std::vector<int> queue;
    dist[2 * source] = 0;
    queue.push_back(2 * source);
    std::size_t head = 0;
    while (head < queue.size()) {
        int state = queue[head++];
        Vertex v = state >> 1;
        int q = state & 1;
        for (Vertex u : g.neighbors(v)) {
            if (!allowed[u]) continue;
            int next = 2 * u + (q ^ 1);
            if (dist[next] == kUnreached) {
                dist[next] = dist[state] + 1;
                queue.push_back(next);
            }
        }
    }
    return dist;
}

// Parent-tracking variant; parent[state] is the predecessor state.
inline std::vector<int> parity_distances_with_parents(const Graph& g, Vertex source,
                                                      const std::vector<char>& allowed,
                                                      std::vector<int>& parent) {
    const int n = g.vertex_count();
    std::vector<int> dist(2 * n, kUnreached);
    parent.assign(2 * n, -1);
    std::vector<int> queue;
    dist[2 * source] = 0;
    queue.push_back(2 * source);
    std::size_t head = 0;
    while (head < queue.size()) {
        int state = queue[head++];
        Vertex v = state >> 1;
        int q = state & 1;
        for (Vertex u : g.neighbors(v)) {
            if (!allowed[u]) continue;
            int next = 2 * u + (q ^ 1);
            if (dist[next] == kUnreached) {
                dist[next] = dist[state] + 1;
                parent[next] = state;
                queue.push_back(next);
            }
        }
    }
    return dist;
}

} // namespace detail

struct OddGirthResult {
    int length = 0;
    CycleWitness witness;
};

// Shortest odd cycle within the allowed vertex set, or nullopt if the allowed
// subgraph is bipartite. Exact and polynomial.
inline std::optional<OddGirthResult> odd_girth_masked(const Graph& g,
                                                      const std::vector<char>& allowed) {
    const int n = g.vertex_count();
    int best = detail::kUnreached;
    Vertex best_v = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (!allowed[v]) continue;
        auto dist = detail::parity_distances(g, v, allowed);
        if (dist[2 * v + 1] < best) {
            best = dist[2 * v + 1];
            best_v = v;
        }
    }
    if (best_v < 0 || best == detail::kUnreached) return std::nullopt;
    std::vector<int> parent;
    detail::parity_distances_with_parents(g, best_v, allowed, parent);
    VertexList walk;
    for (int state = 2 * best_v + 1; state != -1; state = parent[state])
        walk.push_back(state >> 1);
    std::reverse(walk.begin(), walk.end());
    CycleWitness cycle = detail::shorten_odd_closed_walk(std::move(walk));
    return OddGirthResult{cycle.length(), std::move(cycle)};
}

inline std::optional<OddGirthResult> odd_girth(const Graph& g) {
    std::vector<char> allowed(g.vertex_count(), 1);
    return odd_girth_masked(g, allowed);
}

namespace detail {

// Depth-first search for a cycle of exactly `length` vertices, anchored at
// each vertex in turn; the anchor is the minimum id on the cycle. A partial
// path is pruned when the parity-lifted distance from its endpoint back to
// the anchor exceeds the remaining edge count.
struct FixedLengthCycleSearch {
    const Graph& g;
    int length;
    long long budget;
    long long nodes = 0;
    bool exceeded = false;

    Vertex anchor = 0;
    std::vector<int> dist;
    std::vector<char> on_path;
    VertexList path;

    FixedLengthCycleSearch(const Graph& gr, int len, long long b)
        : g(gr), length(len), budget(b), on_path(gr.vertex_count(), 0) {}

    bool run(CycleWitness& out) {
        const int n = g.vertex_count();
        std::vector<char> allowed(n, 0);
        for (Vertex a = 0; a + length <= n; ++a) {
            anchor = a;
            std::fill(allowed.begin(), allowed.end(), 0);
            for (Vertex v = a; v < n; ++v) allowed[v] = 1;
            dist = parity_distances(g, a, allowed);
            if (dist[2 * a + (length & 1)] > length) continue;
            path.assign(1, a);
            on_path[a] = 1;
            bool hit = dfs(a, 1);
            on_path[a] = 0;
            if (hit) {
                out.vertices = path;
                return true;
            }
            if (exceeded) return false;
        }
        return false;
    }

    bool dfs(Vertex v, int t) {
        if (++nodes > budget) {
            exceeded = true;
            return false;
        }
        if (t == length) return g.has_edge(v, anchor);
        for (Vertex u : g.neighbors(v)) {
            if (u <= anchor || on_path[u]) continue;
            int rem = length - t; // edges still needed from u back to anchor
            if (dist[2 * u + (rem & 1)] > rem) continue;
            on_path[u] = 1;
            path.push_back(u);
            if (dfs(u, t + 1)) return true;
            path.pop_back();
            on_path[u] = 0;
            if (exceeded) return false;
        }
        return false;
    }
};

} // namespace detail

// Exact fixed-length cycle detection. A cycle lies inside one biconnected
// block, so blocks that are too small, or bipartite while L is odd, are
// skipped without search.
inline SearchOutcome<CycleWitness> contains_cycle_of_length(const Graph& g, int length,
                                                            long long budget = kDefaultBudget) {
    if (length < 3) throw input_error("contains_cycle_of_length: need length >= 3");
    SearchOutcome<CycleWitness> out;
    if (length > g.vertex_count()) {
        out.status = SearchStatus::absent;
        return out;
    }
    for (const auto& block : biconnected_blocks(g)) {
        if (static_cast<int>(block.size()) < length) continue;
        auto sub = induced_subgraph(g, VertexSet(block));
        if (length % 2 == 1 && is_bipartite(sub.graph).bipartite()) continue;
        detail::FixedLengthCycleSearch search(sub.graph, length, budget - out.nodes_explored);
        CycleWitness local;
        bool hit = search.run(local);
        out.nodes_explored += search.nodes;
        if (hit) {
            for (Vertex& v : local.vertices) v = sub.to_parent[v];
            out.status = SearchStatus::found;
            out.witness = std::move(local);
            return out;
        }
        if (search.exceeded) {
            out.status = SearchStatus::budget_exceeded;
            return out;
        }
    }
    out.status = SearchStatus::absent;
    return out;
}

struct FamilyFreeOutcome {
    SearchStatus status = SearchStatus::absent; // found = some member present
    std::optional<int> violated_length;
    std::optional<CycleWitness> witness;
    long long nodes_explored = 0;
    std::vector<std::pair<int, SearchStatus>> per_length;

    bool free() const { return status == SearchStatus::absent; }
};

inline FamilyFreeOutcome is_family_free(const Graph& g, const OddCycleFamily& family,
                                        long long budget = kDefaultBudget) {
    FamilyFreeOutcome out;
    for (int L : family.lengths()) {
        auto res = contains_cycle_of_length(g, L, budget - out.nodes_explored);
        out.nodes_explored += res.nodes_explored;
        out.per_length.emplace_back(L, res.status);
        if (res.found()) {
            out.status = SearchStatus::found;
            out.violated_length = L;
            out.witness = std::move(res.witness);
            return out;
        }
        if (res.exhausted_budget()) {
            out.status = SearchStatus::budget_exceeded;
            return out;
        }
    }
    out.status = SearchStatus::absent;
    return out;
}

namespace detail {

struct ParityPathSearch {
    const Graph& g;
    Vertex target;
    int want_bit; // desired order parity: 1 = odd
    int max_order;
    const std::vector<char>& allowed;
    std::vector<int> dist; // parity-lifted distances to target
    long long budget;
    long long nodes = 0;
    bool exceeded = false;
    std::vector<char> on_path;
    VertexList path;

    ParityPathSearch(const Graph& gr, Vertex to, int bit, int bound,
                     const std::vector<char>& allow, long long b)
        : g(gr), target(to), want_bit(bit), max_order(bound), allowed(allow),
          budget(b), on_path(gr.vertex_count(), 0) {
        dist = parity_distances(g, target, allowed);
    }

    bool run(Vertex from, PathWitness& out) {
        path.assign(1, from);
        on_path[from] = 1;
        bool hit = dfs(from, 1);
        on_path[from] = 0;
        if (hit) out.vertices = path;
        return hit;
    }

    bool dfs(Vertex v, int t) {
        if (++nodes > budget) {
            exceeded = true;
            return false;
        }
        for (Vertex u : g.neighbors(v)) {
            if (!allowed[u] || on_path[u]) continue;
            int t1 = t + 1;
            if (u == target) {
                if (t1 <= max_order && (t1 & 1) == want_bit) {
                    path.push_back(u);
                    return true;
                }
                continue; // a simple path may not pass through the target
            }
            // completion from u needs e edges with t1 + e of the wanted
            // parity and t1 + e <= max_order
            int need_par = (want_bit + t1) & 1;
            if (dist[2 * u + need_par] > max_order - t1) continue;
            on_path[u] = 1;
            path.push_back(u);
            if (dfs(u, t1)) return true;
            path.pop_back();
            on_path[u] = 0;
            if (exceeded) return false;
        }
        return false;
    }
};

} // namespace detail

// Simple path from u to v with |V| <= max_order, |V| of the given parity,
// avoiding `forbidden`. Exhaustive within budget.
inline SearchOutcome<PathWitness> parity_path_exists(const Graph& g, Vertex u, Vertex v,
                                                     Parity parity, int max_order,
                                                     const VertexSet& forbidden = {},
                                                     long long budget = kDefaultBudget) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw input_error("parity_path_exists: endpoint out of range");
    if (u == v)
        throw input_error("parity_path_exists: endpoints must be distinct");
    if (forbidden.contains(u) || forbidden.contains(v))
        throw input_error("parity_path_exists: endpoint is forbidden");
    std::vector<char> allowed(g.vertex_count(), 1);
    for (Vertex w : forbidden) {
        if (w < 0 || w >= g.vertex_count())
            throw input_error("parity_path_exists: forbidden vertex out of range");
        allowed[w] = 0;
    }
    SearchOutcome<PathWitness> out;
    int bound = std::min(max_order, g.vertex_count());
    if (bound < 2) {
        out.status = SearchStatus::absent;
        return out;
    }
    detail::ParityPathSearch search(g, v, parity == Parity::odd ? 1 : 0, bound, allowed, budget);
    PathWitness witness;
    bool hit = search.run(u, witness);
    out.nodes_explored = search.nodes;
    if (hit) {
        out.status = SearchStatus::found;
        out.witness = std::move(witness);
    } else {
        out.status = search.exceeded ? SearchStatus::budget_exceeded : SearchStatus::absent;
    }
    return out;
}

namespace detail {

// Simple u-v path with exactly `order` vertices; used for "does adding edge
// (u,v) close a cycle of a given length" checks.
struct ExactOrderPathSearch {
    const Graph& g;
    Vertex target;
    int order;
    std::vector<int> dist;
    long long budget;
    long long nodes = 0;
    bool exceeded = false;
    std::vector<char> on_path;

    ExactOrderPathSearch(const Graph& gr, Vertex to, int ord, long long b)
        : g(gr), target(to), order(ord), budget(b), on_path(gr.vertex_count(), 0) {
        std::vector<char> allowed(gr.vertex_count(), 1);
        dist = parity_distances(g, target, allowed);
    }

    bool run(Vertex from) {
        on_path[from] = 1;
        bool hit = dfs(from, 1);
        on_path[from] = 0;
        return hit;
    }

    bool dfs(Vertex v, int t) {
        if (++nodes > budget) {
            exceeded = true;
            return false;
        }
        for (Vertex u : g.neighbors(v)) {
            if (on_path[u]) continue;
            int t1 = t + 1;
            if (u == target) {
                if (t1 == order) return true;
                continue;
            }
            int rem = order - t1; // exact edges still needed
            if (rem < 1 || dist[2 * u + (rem & 1)] > rem) continue;
            on_path[u] = 1;
            if (dfs(u, t1)) return true;
            on_path[u] = 0;
            if (exceeded) return false;
        }
        return false;
    }
};

} // namespace detail

inline SearchOutcome<PathWitness> exists_path_of_exact_order(const Graph& g, Vertex u, Vertex v,
                                                             int order,
                                                             long long budget = kDefaultBudget) {
    if (u == v || order < 2) throw input_error("exists_path_of_exact_order: bad query");
    SearchOutcome<PathWitness> out;
    if (order > g.vertex_count()) {
        out.status = SearchStatus::absent;
        return out;
    }
    detail::ExactOrderPathSearch search(g, v, order, budget);
    bool hit = search.run(u);
    out.nodes_explored = search.nodes;
    out.status = hit ? SearchStatus::found
                     : (search.exceeded ? SearchStatus::budget_exceeded : SearchStatus::absent);
    return out;
}

} // namespace oddcore
