#pragma once

#include "oddcore/graph.hpp"

#include <string>
#include <vector>

namespace oddcore {

// Deterministic generators for the named extremal graphs. Layout conventions
// are fixed so recognizers and fixtures can rely on vertex ids:
//   - blob constructions place blobs contiguously; blob i occupies
//     [i*2s, (i+1)*2s) with the selected vertex first, side A = first s ids,
//     side B = the next s ids;
//   - turan parts are contiguous, larger parts first.

// Complete r-partite graph with part sizes as equal as possible.
inline Graph turan_graph(int r, int n) {
    if (r < 1 || r > n) throw input_error("turan_graph: need 1 <= r <= n");
    std::vector<int> part_of(n);
    int q = n / r, rem = n % r, v = 0;
    for (int i = 0; i < r; ++i) {
        int size = q + (i < rem ? 1 : 0);
        for (int j = 0; j < size; ++j) part_of[v++] = i;
    }
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[a] != part_of[b]) edges.emplace_back(a, b);
    return Graph::from_edge_list(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw input_error("complete_bipartite: negative part size");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edge_list(a + b, edges);
}

struct BlobConstruction {
    Graph graph;
    VertexList selected; // one vertex per blob, ascending
};

namespace detail {

// blobs disjoint copies of K_{s,s}; selected vertex = first vertex of each
// blob; edges between selected vertices given by `selected_edges` over blob
// indices.
inline BlobConstruction blob_construction(int blobs, int s,
                                          const std::vector<Edge>& selected_edges) {
    const int n = blobs * 2 * s;
    std::vector<Edge> edges;
    VertexList selected(blobs);
    for (int i = 0; i < blobs; ++i) {
        int base = i * 2 * s;
        selected[i] = base;
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b)
                edges.emplace_back(base + a, base + s + b);
    }
    for (const auto& [i, j] : selected_edges)
        edges.emplace_back(selected[i], selected[j]);
    return {Graph::from_edge_list(n, edges), std::move(selected)};
}

} // namespace detail

// r+1 disjoint copies of K_{n/(2r+2), n/(2r+2)} with one selected vertex per
// copy, the selected vertices forming a clique K_{r+1}.
inline BlobConstruction g_construction(int r, int n) {
    if (r < 1) throw input_error("g_construction: need r >= 1");
    if (n <= 0 || n % (2 * (r + 1)) != 0)
        throw input_error("g_construction: n must be a positive multiple of 2(r+1)");
    int s = n / (2 * (r + 1));
    std::vector<Edge> clique;
    for (int i = 0; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) clique.emplace_back(i, j);
    return detail::blob_construction(r + 1, s, clique);
}

// 2p+1 disjoint copies of K_{n/(2(2p+1)), n/(2(2p+1))} with the selected
// vertices forming a cycle of length 2p+1.
inline BlobConstruction bc_construction(int p, int n) {
    if (p < 1) throw input_error("bc_construction: need p >= 1");
    int blobs = 2 * p + 1;
    if (n <= 0 || n % (2 * blobs) != 0)
        throw input_error("bc_construction: n must be a positive multiple of 2(2p+1)");
    int s = n / (2 * blobs);
    std::vector<Edge> cycle;
    for (int i = 0; i < blobs; ++i) cycle.emplace_back(i, (i + 1) % blobs);
    return detail::blob_construction(blobs, s, cycle);
}

// Balanced blow-up of C_m: m independent parts of size t, consecutive parts
// completely joined. Part i occupies [i*t, (i+1)*t).
inline Graph cycle_blowup(int m, int t) {
    if (m < 3) throw input_error("cycle_blowup: need m >= 3");
    if (t < 1) throw input_error("cycle_blowup: need t >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        for (int a = 0; a < t; ++a)
            for (int b = 0; b < t; ++b)
                edges.emplace_back(i * t + a, j * t + b);
    }
    return Graph::from_edge_list(m * t, edges);
}

// K_{floor((n-r+1)/2), ceil((n-r+1)/2)} plus a suspension K_r sharing exactly
// one vertex with the bipartite part. Vertices [0, n-r+1) are the bipartite
// part (smaller side first); vertex 0 is the suspension point; the other r-1
// clique vertices are [n-r+1, n).
inline Graph t_star(int r, int n) {
    if (r < 1) throw input_error("t_star: need r >= 1");
    if (n < r) throw input_error("t_star: need n >= r");
    int b = n - r + 1;
    int lo = b / 2;
    std::vector<Edge> edges;
    for (int i = 0; i < lo; ++i)
        for (int j = lo; j < b; ++j) edges.emplace_back(i, j);
    VertexList clique{0};
    for (int i = 0; i < r - 1; ++i) clique.push_back(b + i);
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            edges.emplace_back(clique[i], clique[j]);
    return Graph::from_edge_list(n, edges);
}

// Spec-string grammar used by the CLI:
//   turan:r,n | gplus:r,n | bc:p,n | blowup:m,t | tstar:r,n | kab:a,b
inline bool looks_like_construction_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) return false;
    std::string kind = spec.substr(0, colon);
    return kind == "turan" || kind == "gplus" || kind == "bc" ||
           kind == "blowup" || kind == "tstar" || kind == "kab";
}

inline Graph generate_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw input_error("construction spec must look like 'kind:a,b'");
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    auto comma = rest.find(',');
    if (comma == std::string::npos)
        throw input_error("construction spec needs two parameters: " + spec);
    int a = 0, b = 0;
    try {
        a = std::stoi(rest.substr(0, comma));
        b = std::stoi(rest.substr(comma + 1));
    } catch (const std::exception&) {
        throw input_error("construction spec has non-integer parameters: " + spec);
    }
    if (kind == "turan") return turan_graph(a, b);
    if (kind == "gplus") return g_construction(a, b).graph;
    if (kind == "bc") return bc_construction(a, b).graph;
    if (kind == "blowup") return cycle_blowup(a, b);
    if (kind == "tstar") return t_star(a, b);
    if (kind == "kab") return complete_bipartite(a, b);
    throw input_error("unknown construction kind: " + kind);
}

} // namespace oddcore
