#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddcore/edge_list.hpp"
#include "oddcore/graph.hpp"
#include "oddcore/parity.hpp"
#include "oddcore/constructions.hpp"

#include "corpus.hpp"

using namespace oddcore;

TEST_CASE("from_edge_list builds symmetric deduplicated adjacency") {
    Graph triangle = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(triangle.vertex_count() == 3);
    CHECK(triangle.edge_count() == 3);
    CHECK(min_degree(triangle) == 2);
    CHECK(triangle.has_edge(0, 1));
    CHECK(triangle.has_edge(1, 0));

    Graph dup = Graph::from_edge_list(4, {{0, 1}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 2}}), input_error);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), input_error);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 0}}), input_error);
}

TEST_CASE("degree sum equals twice the edge count on every fixture") {
    for (const auto& [name, g] : corpus::small_fixtures()) {
        CAPTURE(name);
        long long sum = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("min_degree") {
    CHECK(min_degree(corpus::complete(3)) == 2);
    CHECK(min_degree(corpus::star(4)) == 1);
    // g_construction(3, 16) has blob sides of size 16/8 = 2
    CHECK(min_degree(g_construction(3, 16).graph) == 2);
    CHECK_THROWS_AS(min_degree(Graph::from_edge_list(0, {})), input_error);
}

TEST_CASE("is_bipartite returns a proper 2-coloring or a valid odd cycle") {
    auto k23 = complete_bipartite(2, 3);
    auto res = is_bipartite(k23);
    REQUIRE(res.bipartite());
    CHECK(res.coloring->proper(k23));
    int side0 = 0;
    for (int s : res.coloring->side) side0 += s == 0;
    CHECK((side0 == 2 || side0 == 3));

    auto c5 = corpus::cycle(5);
    auto odd = is_bipartite(c5);
    REQUIRE(!odd.bipartite());
    REQUIRE(odd.odd_cycle.has_value());
    CHECK(odd.odd_cycle->length() == 5);
    CHECK(validate_cycle_witness(c5, *odd.odd_cycle));

    // the only odd cycle in BC_3(12) is the selected triangle, so any valid
    // witness has length 3
    auto bc = bc_construction(1, 12).graph;
    auto bc_res = is_bipartite(bc);
    REQUIRE(!bc_res.bipartite());
    CHECK(bc_res.odd_cycle->length() == 3);
    CHECK(validate_cycle_witness(bc, *bc_res.odd_cycle));
}

TEST_CASE("is_bipartite agrees with odd_girth across the corpus") {
    auto graphs = corpus::small_fixtures();
    for (const auto& [name, g] : graphs) {
        CAPTURE(name);
        auto bip = is_bipartite(g);
        auto og = odd_girth(g);
        CHECK(bip.bipartite() == !og.has_value());
        if (bip.odd_cycle) CHECK(validate_cycle_witness(g, *bip.odd_cycle));
        if (og) CHECK(validate_cycle_witness(g, og->witness));
    }
}

TEST_CASE("induced_subgraph") {
    auto k4 = corpus::complete(4);
    auto sub = induced_subgraph(k4, VertexSet::of({0, 1, 2}));
    CHECK(sub.graph == corpus::complete(3));
    CHECK(sub.to_parent == VertexList{0, 1, 2});

    auto c6 = corpus::cycle(6);
    auto empty3 = induced_subgraph(c6, VertexSet::of({0, 2, 4}));
    CHECK(empty3.graph.vertex_count() == 3);
    CHECK(empty3.graph.edge_count() == 0);

    auto gc = g_construction(3, 16);
    auto sel = induced_subgraph(gc.graph, VertexSet(gc.selected));
    CHECK(sel.graph == corpus::complete(4));

    CHECK_THROWS_AS(induced_subgraph(c6, VertexSet::of({7})), input_error);

    // identity relabeling reproduces the graph
    for (const auto& [name, g] : corpus::small_fixtures()) {
        CAPTURE(name);
        VertexList all(g.vertex_count());
        std::iota(all.begin(), all.end(), 0);
        CHECK(induced_subgraph(g, VertexSet(all)).graph == g);
    }
}

TEST_CASE("is_cut_vertex") {
    auto p3 = corpus::path_graph(3);
    CHECK(is_cut_vertex(p3, 1));
    CHECK(!is_cut_vertex(p3, 0));
    auto c5 = corpus::cycle(5);
    for (Vertex v = 0; v < 5; ++v) CHECK(!is_cut_vertex(c5, v));

    auto bc = bc_construction(1, 12);
    for (Vertex v : bc.selected) CHECK(is_cut_vertex(bc.graph, v));

    Graph disconnected = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(is_cut_vertex(disconnected, 0), input_error);
}

TEST_CASE("cut_vertices matches the one-at-a-time definition") {
    for (const auto& [name, g] : corpus::small_fixtures()) {
        if (!is_connected(g) || g.vertex_count() < 3) continue;
        CAPTURE(name);
        auto cuts = cut_vertices(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            bool listed = std::find(cuts.begin(), cuts.end(), v) != cuts.end();
            CHECK(listed == is_cut_vertex(g, v));
        }
    }
}

TEST_CASE("biconnected blocks cover every edge exactly once") {
    // two distinct blocks share at most one vertex, so the induced subgraph
    // of each block's vertex set holds exactly that block's edges
    for (const auto& [name, g] : corpus::small_fixtures()) {
        CAPTURE(name);
        long long covered = 0;
        for (const auto& block : biconnected_blocks(g))
            covered += induced_subgraph(g, VertexSet(block)).graph.edge_count();
        CHECK(covered == g.edge_count());
    }
    auto bc = bc_construction(2, 20).graph;
    auto blocks = biconnected_blocks(bc);
    CHECK(blocks.size() == 6); // 5 blobs + the selected C5
}

TEST_CASE("edge list round-trips through the text format") {
    for (const auto& [name, g] : corpus::small_fixtures()) {
        CAPTURE(name);
        CHECK(graph_from_edge_list_text(edge_list_text(g)) == g);
    }
    Graph g = graph_from_edge_list_text("# comment\n3 2\n0 1\n# another\n1 2\n");
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(graph_from_edge_list_text("3 2\n0 1\n"), input_error);
    CHECK_THROWS_AS(graph_from_edge_list_text(""), input_error);
}
