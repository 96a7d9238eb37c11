#pragma once

#include "oddcore/types.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>

namespace oddcore {

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(VertexList ids) : ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    static VertexSet of(std::initializer_list<Vertex> ids) {
        return VertexSet(VertexList(ids));
    }

    const VertexList& ids() const { return ids_; }
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }

    bool contains(Vertex v) const {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }

    void insert(Vertex v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) ids_.insert(it, v);
    }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const VertexSet&) const = default;

private:
    VertexList ids_;
};

// Immutable simple undirected graph on vertices 0..n-1. Neighbor lists are
// sorted; for small graphs an adjacency bit matrix backs O(1) edge queries.
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(int n, const std::vector<Edge>& pairs) {
        if (n < 0) throw input_error("vertex count must be non-negative");
        Graph g;
        g.n_ = n;
        g.adj_.assign(n, {});
        for (const auto& [u, v] : pairs) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw input_error("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ") with n=" + std::to_string(n));
            if (u == v)
                throw input_error("self-loop rejected at vertex " + std::to_string(u));
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            g.m_ += static_cast<long long>(nb.size());
        }
        g.m_ /= 2;
        g.build_bit_matrix();
        return g;
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    int degree(Vertex v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    const VertexList& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        if (!bits_.empty())
            return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
                    (v & 63)) & 1u;
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    static constexpr int kBitMatrixMaxN = 2048;

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw input_error("vertex id out of range: " + std::to_string(v));
    }

    void build_bit_matrix() {
        if (n_ == 0 || n_ > kBitMatrixMaxN) return;
        words_ = static_cast<std::size_t>((n_ + 63) / 64);
        bits_.assign(words_ * static_cast<std::size_t>(n_), 0);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adj_[u])
                bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |=
                    std::uint64_t{1} << (v & 63);
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<VertexList> adj_;
    std::vector<std::uint64_t> bits_;
    std::size_t words_ = 0;
};

inline int min_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw input_error("min_degree of empty graph");
    int best = g.degree(0);
    for (Vertex v = 1; v < g.vertex_count(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

struct TwoColoring {
    std::vector<int> side; // 0 or 1 per vertex

    bool proper(const Graph& g) const {
        if (static_cast<int>(side.size()) != g.vertex_count()) return false;
        for (const auto& [u, v] : g.edges())
            if (side[u] == side[v]) return false;
        return true;
    }
};

struct BipartiteCheck {
    std::optional<TwoColoring> coloring;
    std::optional<CycleWitness> odd_cycle;

    bool bipartite() const { return coloring.has_value(); }
};

namespace detail {

// Splits a closed odd walk (first == last) at repeated vertices, keeping the
// odd half, until the remainder is a simple odd cycle.
inline CycleWitness shorten_odd_closed_walk(VertexList walk) {
    // walk: v0 v1 ... vL with v0 == vL, L odd
    for (;;) {
        walk.pop_back(); // cyclic representation, length = walk.size()
        const int len = static_cast<int>(walk.size());
        std::vector<int> seen_at;
        int i = -1, j = -1;
        {
            Vertex max_id = *std::max_element(walk.begin(), walk.end());
            seen_at.assign(max_id + 1, -1);
            for (int t = 0; t < len && i < 0; ++t) {
                Vertex v = walk[t];
                if (seen_at[v] >= 0) {
                    i = seen_at[v];
                    j = t;
                } else {
                    seen_at[v] = t;
                }
            }
        }
        if (i < 0) return CycleWitness{std::move(walk)};
        // split into walk[i..j] and walk[j..] + walk[..i]; keep the odd part
        VertexList inner(walk.begin() + i, walk.begin() + j);
        if (inner.size() % 2 == 1) {
            inner.push_back(walk[j]); // close for the next round
            walk = std::move(inner);
        } else {
            VertexList outer(walk.begin() + j, walk.end());
            outer.insert(outer.end(), walk.begin(), walk.begin() + i);
            outer.push_back(walk[j]);
            walk = std::move(outer);
        }
    }
}

} // namespace detail

// 2-colors the graph, or returns an odd closed walk shortened to a simple
// odd cycle. Deterministic: components are rooted at the lowest unvisited id.
inline BipartiteCheck is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    std::vector<Vertex> parent(n, -1);
    VertexList queue;
    for (Vertex root = 0; root < n; ++root) {
        if (side[root] >= 0) continue;
        side[root] = 0;
        queue.assign(1, root);
        std::size_t head = 0;
        while (head < queue.size()) {
            Vertex u = queue[head++];
            for (Vertex v : g.neighbors(u)) {
                if (side[v] < 0) {
                    side[v] = side[u] ^ 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    // closed odd walk root -> v -> u -> root via tree paths
                    // and the conflicting edge
                    VertexList up, down;
                    for (Vertex w = v; w != -1; w = parent[w]) up.push_back(w);
                    for (Vertex w = u; w != -1; w = parent[w]) down.push_back(w);
                    std::reverse(up.begin(), up.end());
                    VertexList walk = up;
                    walk.insert(walk.end(), down.begin(), down.end());
                    return {std::nullopt, detail::shorten_odd_closed_walk(std::move(walk))};
                }
            }
        }
    }
    return {TwoColoring{std::move(side)}, std::nullopt};
}

struct InducedSubgraph {
    Graph graph;
    VertexList to_parent; // to_parent[local id] = id in the host graph
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (v < 0 || v >= g.vertex_count())
            throw input_error("induced_subgraph: vertex out of range");
    std::vector<int> local(g.vertex_count(), -1);
    int next = 0;
    for (Vertex v : s) local[v] = next++;
    std::vector<Edge> edges;
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v))
            if (v < w && local[w] >= 0) edges.emplace_back(local[v], local[w]);
    return {Graph::from_edge_list(s.size(), edges), s.ids()};
}

inline std::vector<VertexList> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<VertexList> comps;
    VertexList stack;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        VertexList comp;
        stack.assign(1, root);
        seen[root] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return connected_components(g).size() == 1;
}

inline bool is_cut_vertex(const Graph& g, Vertex v) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n) throw input_error("is_cut_vertex: vertex out of range");
    if (!is_connected(g)) throw input_error("is_cut_vertex requires a connected graph");
    if (n <= 2) return false;
    std::vector<char> seen(n, 0);
    seen[v] = 1;
    VertexList stack;
    stack.push_back(v == 0 ? 1 : 0);
    seen[stack.back()] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached < n - 1;
}

namespace detail {

// Iterative lowlink DFS shared by cut_vertices and biconnected_blocks.
// Emits blocks as vertex sets (every block has >= 2 vertices).
struct BlockDecomposition {
    std::vector<Vertex> cut_vertices;
    std::vector<VertexList> blocks;
};

inline BlockDecomposition block_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::size_t> next_child(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<Edge> edge_stack;
    BlockDecomposition out;
    int timer = 0;

    auto pop_block = [&](Vertex u, Vertex v) {
        VertexList verts;
        while (!edge_stack.empty()) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e.first == u && e.second == v) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (verts.size() >= 2) out.blocks.push_back(std::move(verts));
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        int root_children = 0;
        VertexList stack{root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Vertex u = stack.back();
            const auto& nb = g.neighbors(u);
            if (next_child[u] < nb.size()) {
                Vertex v = nb[next_child[u]++];
                if (disc[v] < 0) {
                    edge_stack.emplace_back(u, v);
                    parent[v] = u;
                    disc[v] = low[v] = timer++;
                    stack.push_back(v);
                } else if (v != parent[u] && disc[v] < disc[u]) {
                    edge_stack.emplace_back(u, v);
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                Vertex p = parent[u];
                low[p] = std::min(low[p], low[u]);
                if (p == root) ++root_children;
                if (low[u] >= disc[p]) {
                    if (p != root) is_cut[p] = 1;
                    pop_block(p, u);
                }
            }
        }
        if (root_children > 1) is_cut[root] = 1;
    }
    for (Vertex v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

} // namespace detail

inline std::vector<Vertex> cut_vertices(const Graph& g) {
    return detail::block_decomposition(g).cut_vertices;
}

// Vertex sets of the biconnected components. Every cycle of the graph lies
// inside exactly one block.
inline std::vector<VertexList> biconnected_blocks(const Graph& g) {
    return detail::block_decomposition(g).blocks;
}

} // namespace oddcore
