#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddcore/bipartization.hpp"
#include "oddcore/constructions.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

using namespace oddcore;

namespace {

void check_d2_result(const Graph& g, const BipartizationResult& res) {
    REQUIRE(res.status == SearchStatus::found);
    CHECK(static_cast<int>(res.removed_vertices.size()) == res.size);
    VertexList kept;
    std::vector<char> removed(g.vertex_count(), 0);
    for (Vertex v : res.removed_vertices) removed[v] = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!removed[v]) kept.push_back(v);
    auto sub = induced_subgraph(g, VertexSet(kept));
    CHECK(is_bipartite(sub.graph).bipartite());
    for (Vertex local = 0; local < sub.graph.vertex_count(); ++local)
        CHECK(res.residual_sides[sub.to_parent[local]] >= 0);
    for (const auto& [u, v] : sub.graph.edges())
        CHECK(res.residual_sides[sub.to_parent[u]] != res.residual_sides[sub.to_parent[v]]);
}

void check_gamma2_result(const Graph& g, const BipartizationResult& res) {
    REQUIRE(res.status == SearchStatus::found);
    CHECK(static_cast<int>(res.removed_edges.size()) == res.size);
    std::vector<Edge> remaining;
    for (const auto& e : g.edges())
        if (std::find(res.removed_edges.begin(), res.removed_edges.end(), e) ==
            res.removed_edges.end())
            remaining.push_back(e);
    CHECK(is_bipartite(Graph::from_edge_list(g.vertex_count(), remaining)).bipartite());
}

} // namespace

TEST_CASE("d2 on small graphs") {
    auto c5_res = d2(corpus::cycle(5));
    CHECK(c5_res.size == 1);
    check_d2_result(corpus::cycle(5), c5_res);

    auto k4_res = d2(corpus::complete(4));
    CHECK(k4_res.size == 2);
    check_d2_result(corpus::complete(4), k4_res);

    CHECK(d2(complete_bipartite(3, 4)).size == 0);
}

TEST_CASE("gamma2 on small graphs") {
    auto c5_res = gamma2(corpus::cycle(5));
    CHECK(c5_res.size == 1);
    check_gamma2_result(corpus::cycle(5), c5_res);

    // maxcut(K4) = 4 of 6 edges
    auto k4_res = gamma2(corpus::complete(4));
    CHECK(k4_res.size == 2);
    check_gamma2_result(corpus::complete(4), k4_res);

    CHECK(gamma2(complete_bipartite(3, 4)).size == 0);
}

TEST_CASE("t_star bipartization values") {
    // all odd cycles of T*(r, n) live in the K_r suspension
    CHECK(d2(t_star(2, 10)).size == 0);
    CHECK(d2(t_star(3, 10)).size == 1);
    CHECK(d2(t_star(4, 12)).size == 2);
    CHECK(d2(t_star(5, 14)).size == 3);
    CHECK(oracle::min_vertex_bipartization_naive(t_star(4, 12)) == 2);

    // gamma2(T*(r, n)) = C(ceil(r/2), 2) + C(floor(r/2), 2)
    CHECK(gamma2(t_star(2, 10)).size == 0);
    CHECK(gamma2(t_star(3, 10)).size == 1);
    CHECK(gamma2(t_star(4, 12)).size == 2);
    CHECK(gamma2(t_star(5, 14)).size == 4);
    CHECK(oracle::min_edge_bipartization_naive(t_star(4, 12)) == 2);
}

TEST_CASE("exact solvers agree with subset enumeration on small graphs") {
    for (const auto& [name, g] : corpus::small_fixtures()) {
        if (g.vertex_count() > 10) continue;
        CAPTURE(name);
        auto vres = d2(g);
        CHECK(vres.size == oracle::min_vertex_bipartization_naive(g));
        check_d2_result(g, vres);
        if (g.edge_count() <= 18 || gamma2(g).size <= 3) {
            auto eres = gamma2(g);
            CHECK(eres.size == oracle::min_edge_bipartization_naive(g));
            check_gamma2_result(g, eres);
        }
    }
    for (const auto& g : corpus::random_connected_corpus(25, 8, 99173)) {
        auto vres = d2(g);
        CHECK(vres.size == oracle::min_vertex_bipartization_naive(g));
        check_d2_result(g, vres);
    }
}

TEST_CASE("gamma2 equals edge count minus max cut, cross-checked") {
    for (const auto& [name, g] : corpus::small_fixtures()) {
        if (g.vertex_count() > 12) continue;
        CAPTURE(name);
        auto mc = max_cut(g);
        CHECK(mc.cut_size == oracle::max_cut_naive(g));
        CHECK(gamma2(g).size == g.edge_count() - mc.cut_size);
    }
}

TEST_CASE("size limits are enforced") {
    auto big = turan_graph(2, 70);
    CHECK_THROWS_AS(d2(big, kDefaultBudget), input_error);
    CHECK_THROWS_AS(gamma2(turan_graph(2, 44), kDefaultBudget), input_error);
}

TEST_CASE("budget exhaustion yields bracketing bounds") {
    auto res = d2(corpus::complete(9), 3);
    CHECK(res.status == SearchStatus::budget_exceeded);
    CHECK(res.lower <= 7);
    CHECK(res.upper >= res.lower);
}
