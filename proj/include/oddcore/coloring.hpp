#pragma once

#include "oddcore/graph.hpp"

namespace oddcore {

struct ColoringCertificate {
    std::vector<int> colors;
    int color_count = 0;
};

inline bool validate_coloring(const Graph& g, const ColoringCertificate& cert) {
    if (static_cast<int>(cert.colors.size()) != g.vertex_count()) return false;
    for (int col : cert.colors)
        if (col < 0 || col >= cert.color_count) return false;
    for (const auto& [u, v] : g.edges())
        if (cert.colors[u] == cert.colors[v]) return false;
    return true;
}

// Greedy clique: repeatedly add the candidate with the most candidate
// neighbors, ties by lowest id. Used only as a chromatic lower bound.
inline VertexSet greedy_clique(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> cand(n, 1);
    VertexList clique;
    int remaining = n;
    while (remaining > 0) {
        int best = -1, best_deg = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (!cand[v]) continue;
            int d = 0;
            for (Vertex u : g.neighbors(v)) d += cand[u];
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        }
        clique.push_back(best);
        std::vector<char> next(n, 0);
        remaining = 0;
        for (Vertex u : g.neighbors(best))
            if (cand[u]) {
                next[u] = 1;
                ++remaining;
            }
        cand.swap(next);
    }
    return VertexSet(std::move(clique));
}

namespace detail {

// DSATUR-ordered backtracking with color symmetry breaking: a vertex may only
// use colors 0..(max color used so far)+1. Branch vertex = max saturation,
// ties by lowest id.
struct KColorSearch {
    const Graph& g;
    int c;
    long long budget;
    long long nodes = 0;
    bool exceeded = false;
    std::vector<int> color;

    KColorSearch(const Graph& gr, int colors, long long b)
        : g(gr), c(colors), budget(b), color(gr.vertex_count(), -1) {}

    int saturation(Vertex v) const {
        std::uint64_t seen = 0;
        int s = 0;
        for (Vertex u : g.neighbors(v)) {
            int col = color[u];
            if (col >= 0) {
                std::uint64_t bit = std::uint64_t{1} << (col & 63);
                if (!(seen & bit)) {
                    seen |= bit;
                    ++s;
                }
            }
        }
        return s;
    }

    bool dfs(int colored, int max_used) {
        if (++nodes > budget) {
            exceeded = true;
            return false;
        }
        const int n = g.vertex_count();
        if (colored == n) return true;
        int pick = -1, pick_sat = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            int s = saturation(v);
            if (s > pick_sat) {
                pick_sat = s;
                pick = v;
            }
        }
        int limit = std::min(max_used + 1, c - 1);
        for (int col = 0; col <= limit; ++col) {
            bool ok = true;
            for (Vertex u : g.neighbors(pick))
                if (color[u] == col) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[pick] = col;
            if (dfs(colored + 1, std::max(max_used, col))) return true;
            color[pick] = -1;
            if (exceeded) return false;
        }
        return false;
    }
};

} // namespace detail

inline SearchOutcome<ColoringCertificate> is_k_colorable(const Graph& g, int c,
                                                         long long budget = kDefaultBudget) {
    if (c < 0) throw input_error("is_k_colorable: negative color count");
    SearchOutcome<ColoringCertificate> out;
    if (g.vertex_count() == 0) {
        out.status = SearchStatus::found;
        out.witness = ColoringCertificate{{}, 0};
        return out;
    }
    if (c == 0) {
        out.status = SearchStatus::absent;
        return out;
    }
    detail::KColorSearch search(g, std::min(c, g.vertex_count()), budget);
    bool hit = search.dfs(0, -1);
    out.nodes_explored = search.nodes;
    if (hit) {
        int used = 0;
        for (int col : search.color) used = std::max(used, col + 1);
        out.status = SearchStatus::found;
        out.witness = ColoringCertificate{std::move(search.color), used};
    } else {
        out.status = search.exceeded ? SearchStatus::budget_exceeded : SearchStatus::absent;
    }
    return out;
}

struct ChromaticResult {
    SearchStatus status = SearchStatus::found;
    int chi = 0; // valid when status == found
    std::optional<ColoringCertificate> certificate;
    int lower = 0; // proven bracketing, useful when the budget ran out
    int upper = 0;
    long long nodes_explored = 0;
};

inline ChromaticResult chromatic_number(const Graph& g, long long budget = kDefaultBudget) {
    ChromaticResult res;
    res.upper = g.vertex_count();
    if (g.vertex_count() == 0) {
        res.certificate = ColoringCertificate{{}, 0};
        return res;
    }
    res.lower = std::max(1, greedy_clique(g).size());
    for (int c = res.lower;; ++c) {
        auto outcome = is_k_colorable(g, c, budget - res.nodes_explored);
        res.nodes_explored += outcome.nodes_explored;
        if (outcome.found()) {
            res.status = SearchStatus::found;
            res.chi = c;
            res.upper = c;
            res.certificate = std::move(outcome.witness);
            return res;
        }
        if (outcome.exhausted_budget()) {
            res.status = SearchStatus::budget_exceeded;
            res.lower = c; // chi >= c was not refuted; c-1 was proven infeasible
            return res;
        }
        res.lower = c + 1;
    }
}

struct PartitionCheck {
    SearchStatus status = SearchStatus::absent;
    bool partite = false;
    std::optional<ColoringCertificate> partition;
    long long nodes_explored = 0;
};

inline PartitionCheck is_r_partite(const Graph& g, int r, long long budget = kDefaultBudget) {
    auto outcome = is_k_colorable(g, r, budget);
    PartitionCheck check;
    check.status = outcome.status;
    check.partite = outcome.found();
    check.partition = std::move(outcome.witness);
    check.nodes_explored = outcome.nodes_explored;
    return check;
}

} // namespace oddcore
