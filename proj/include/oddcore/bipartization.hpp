#pragma once

#include "oddcore/parity.hpp"

namespace oddcore {

// Exact bipartization at desk scale. These problems are NP-hard; the solvers
// here are oracle-grade on small fixtures, not scalable.
struct BipartizationResult {
    SearchStatus status = SearchStatus::found; // found = proven optimum
    std::vector<Vertex> removed_vertices;
    std::vector<Edge> removed_edges;
    int size = -1;
    std::vector<int> residual_sides; // 2-coloring of the remainder, -1 = removed
    int lower = 0; // bracketing bounds, meaningful when the budget ran out
    int upper = 0;
    long long nodes_explored = 0;
};

namespace detail {

struct OddCycleTransversalSearch {
    const Graph& g;
    long long budget;
    long long nodes = 0;
    bool exceeded = false;
    std::vector<char> allowed;
    std::vector<Vertex> removed;

    OddCycleTransversalSearch(const Graph& gr, long long b)
        : g(gr), budget(b), allowed(gr.vertex_count(), 1) {}

    // Branch on the vertices of a shortest odd cycle: any transversal must
    // hit every odd cycle.
    bool solve(int depth_left) {
        if (++nodes > budget) {
            exceeded = true;
            return false;
        }
        auto og = odd_girth_masked(g, allowed);
        if (!og) return true;
        if (depth_left == 0) return false;
        VertexList branch = og->witness.vertices;
        std::sort(branch.begin(), branch.end());
        for (Vertex v : branch) {
            allowed[v] = 0;
            removed.push_back(v);
            if (solve(depth_left - 1)) return true;
            removed.pop_back();
            allowed[v] = 1;
            if (exceeded) return false;
        }
        return false;
    }
};

inline int greedy_transversal_size(const Graph& g) {
    std::vector<char> allowed(g.vertex_count(), 1);
    int removed = 0;
    while (auto og = odd_girth_masked(g, allowed)) {
        Vertex pick = -1;
        int best_deg = -1;
        for (Vertex v : og->witness.vertices)
            if (g.degree(v) > best_deg) {
                best_deg = g.degree(v);
                pick = v;
            }
        allowed[pick] = 0;
        ++removed;
    }
    return removed;
}

} // namespace detail

// d2: minimum number of vertices whose removal leaves a bipartite graph.
// Iterative deepening; at depth t a failure proves d2 > t.
inline BipartizationResult d2(const Graph& g, long long budget = kDefaultBudget) {
    if (g.vertex_count() > 64)
        throw input_error("d2 exact solver is limited to n <= 64");
    BipartizationResult res;
    res.upper = detail::greedy_transversal_size(g);
    for (int t = 0; t <= res.upper; ++t) {
        detail::OddCycleTransversalSearch search(g, budget - res.nodes_explored);
        bool solved = search.solve(t);
        res.nodes_explored += search.nodes;
        if (solved) {
            res.status = SearchStatus::found;
            res.removed_vertices = search.removed;
            std::sort(res.removed_vertices.begin(), res.removed_vertices.end());
            res.size = t;
            res.lower = t;
            res.upper = t;
            VertexList kept;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                if (search.allowed[v]) kept.push_back(v);
            auto sub = induced_subgraph(g, VertexSet(kept));
            auto bip = is_bipartite(sub.graph);
            res.residual_sides.assign(g.vertex_count(), -1);
            for (Vertex local = 0; local < sub.graph.vertex_count(); ++local)
                res.residual_sides[sub.to_parent[local]] = bip.coloring->side[local];
            return res;
        }
        if (search.exceeded) {
            res.status = SearchStatus::budget_exceeded;
            res.lower = t; // depths below t were exhausted
            return res;
        }
        res.lower = t + 1;
    }
    return res; // unreachable: the greedy upper bound is always feasible
}

namespace detail {

struct MaxCutSearch {
    const Graph& g;
    long long budget;
    long long nodes = 0;
    bool exceeded = false;
    VertexList order;            // branch order: degree descending, id ascending
    std::vector<int> side;       // -1 undecided
    long long best_cut = -1;
    std::vector<int> best_side;

    MaxCutSearch(const Graph& gr, long long b) : g(gr), budget(b), side(gr.vertex_count(), -1) {
        order.resize(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        seed_incumbent();
    }

    void seed_incumbent() {
        std::vector<int> greedy(g.vertex_count(), -1);
        for (Vertex v : order) {
            int to0 = 0, to1 = 0;
            for (Vertex u : g.neighbors(v)) {
                if (greedy[u] == 0) ++to0;
                if (greedy[u] == 1) ++to1;
            }
            greedy[v] = to0 >= to1 ? 1 : 0;
        }
        long long cut = 0;
        for (const auto& [u, v] : g.edges()) cut += greedy[u] != greedy[v];
        best_cut = cut;
        best_side = std::move(greedy);
    }

    long long upper_bound(std::size_t next, long long cut) const {
        // undecided vertices realize at most max(edges into side 0, side 1)
        // of their decided edges; undecided-undecided edges all count once
        long long bound = cut;
        for (std::size_t i = next; i < order.size(); ++i) {
            Vertex v = order[i];
            int to0 = 0, to1 = 0;
            for (Vertex u : g.neighbors(v)) {
                if (side[u] == 0) ++to0;
                else if (side[u] == 1) ++to1;
                else if (u > v) ++bound;
            }
            bound += std::max(to0, to1);
        }
        return bound;
    }

    void dfs(std::size_t next, long long cut) {
        if (++nodes > budget) {
            exceeded = true;
            return;
        }
        if (next == order.size()) {
            if (cut > best_cut) {
                best_cut = cut;
                best_side = side;
            }
            return;
        }
        if (upper_bound(next, cut) <= best_cut) return;
        Vertex v = order[next];
        int last = next == 0 ? 0 : 1; // first vertex pinned to side 0
        for (int s = 0; s <= last; ++s) {
            side[v] = s;
            long long gain = 0;
            for (Vertex u : g.neighbors(v))
                if (side[u] != -1 && u != v && side[u] != s) ++gain;
            dfs(next + 1, cut + gain);
            side[v] = -1;
            if (exceeded) return;
        }
    }

    void run() { dfs(0, 0); }
};

} // namespace detail

struct MaxCutResult {
    SearchStatus status = SearchStatus::found;
    long long cut_size = 0;
    std::vector<int> sides;
    long long nodes_explored = 0;
};

inline MaxCutResult max_cut(const Graph& g, long long budget = kDefaultBudget) {
    if (g.vertex_count() > 40)
        throw input_error("max_cut exact solver is limited to n <= 40");
    detail::MaxCutSearch search(g, budget);
    if (g.vertex_count() > 0) search.run();
    MaxCutResult res;
    res.status = search.exceeded ? SearchStatus::budget_exceeded : SearchStatus::found;
    res.cut_size = search.best_cut < 0 ? 0 : search.best_cut;
    res.sides = search.best_side;
    res.nodes_explored = search.nodes;
    return res;
}

// gamma2: minimum number of edges whose removal leaves a bipartite graph,
// computed as |E| - maxcut.
inline BipartizationResult gamma2(const Graph& g, long long budget = kDefaultBudget) {
    if (g.vertex_count() > 40)
        throw input_error("gamma2 exact solver is limited to n <= 40");
    auto mc = max_cut(g, budget);
    BipartizationResult res;
    res.nodes_explored = mc.nodes_explored;
    res.upper = static_cast<int>(g.edge_count() - mc.cut_size);
    if (mc.status == SearchStatus::budget_exceeded) {
        res.status = SearchStatus::budget_exceeded;
        res.lower = is_bipartite(g).bipartite() ? 0 : 1;
        return res;
    }
    res.status = SearchStatus::found;
    res.size = res.upper;
    res.lower = res.size;
    for (const auto& [u, v] : g.edges())
        if (mc.sides[u] == mc.sides[v]) res.removed_edges.emplace_back(u, v);
    res.residual_sides = mc.sides;
    return res;
}

} // namespace oddcore
