#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddcore/cores.hpp"
#include "oddcore/constructions.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

using namespace oddcore;

TEST_CASE("certify_2k_core") {
    auto c5 = corpus::cycle(5);
    auto edge_core = certify_2k_core(c5, VertexSet::of({0, 1}), 5);
    REQUIRE(edge_core);
    CHECK(validate_core_certificate(c5, *edge_core));

    // every C5 pair has an even path of order <= 4 inside the cycle
    auto full = certify_2k_core(c5, VertexSet::of({0, 1, 2, 3, 4}), 2);
    REQUIRE(full);
    CHECK(validate_core_certificate(c5, *full));

    // P3 endpoints: the only connecting path has odd order 3
    auto p3 = corpus::path_graph(3);
    CHECK(!certify_2k_core(p3, VertexSet::of({0, 2}), 3));

    CHECK_THROWS_AS(certify_2k_core(c5, VertexSet::of({0}), 3), input_error);
}

TEST_CASE("certify_strong_2k_core") {
    auto k3 = corpus::complete(3);
    auto tri = certify_strong_2k_core(k3, VertexSet::of({0, 1, 2}), 2);
    REQUIRE(tri);
    CHECK(validate_core_certificate(k3, *tri));

    Graph edge = Graph::from_edge_list(2, {{0, 1}});
    CHECK(!certify_strong_2k_core(edge, VertexSet::of({0, 1}), 5));

    // C5: adjacent pairs need the order-5 odd path, so k=2 fails and k=3 works
    auto c5 = corpus::cycle(5);
    VertexSet all5 = VertexSet::of({0, 1, 2, 3, 4});
    CHECK(!certify_strong_2k_core(c5, all5, 2));
    auto strong5 = certify_strong_2k_core(c5, all5, 3);
    REQUIRE(strong5);
    CHECK(validate_core_certificate(c5, *strong5));
}

TEST_CASE("certificates stay valid when k grows") {
    auto c5 = corpus::cycle(5);
    VertexSet all5 = VertexSet::of({0, 1, 2, 3, 4});
    for (int k = 3; k <= 6; ++k) CHECK(certify_strong_2k_core(c5, all5, k).has_value());
}

TEST_CASE("odd cycles shorter than 2k+1 are strong-2k-cores, C_{2k+1} is not") {
    for (int L : {3, 5, 7, 9}) {
        auto cl = corpus::cycle(L);
        VertexList all(L);
        std::iota(all.begin(), all.end(), 0);
        VertexSet h(all);
        for (int k = (L + 1) / 2; k <= 6; ++k) {
            CAPTURE(L);
            CAPTURE(k);
            CHECK(certify_strong_2k_core(cl, h, k).has_value());
        }
        // at L = 2k+1 adjacent pairs lack an odd path of order <= 2k
        int k_reject = (L - 1) / 2;
        if (k_reject >= 1) CHECK(!certify_strong_2k_core(cl, h, k_reject).has_value());
    }
}

TEST_CASE("find_extension on the extremal fixture finds nothing") {
    auto gc = g_construction(3, 16);
    auto res = find_extension(gc.graph, VertexSet(gc.selected), 5);
    CHECK(res.status == SearchStatus::absent);
}

TEST_CASE("find_extension prefers the single-vertex two-anchor pattern") {
    auto k5 = corpus::complete(5);
    auto res = find_extension(k5, VertexSet::of({0, 1, 2}), 5);
    REQUIRE(res.step);
    CHECK(res.step->pattern == ExtensionPattern::two_anchor_single_vertex);
    CHECK(res.step->path.vertices == VertexList{3});
    CHECK(res.step->anchors == VertexList{0, 1});
    auto grown = apply_extension(k5, VertexSet::of({0, 1, 2}), *res.step, 5);
    CHECK(grown == VertexSet::of({0, 1, 2, 3}));
    CHECK(certify_strong_2k_core(k5, grown, 5).has_value());
}

TEST_CASE("a pendant vertex matches neither pattern") {
    // C5 plus a pendant w adjacent to one cycle vertex
    Graph g = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
    auto res = find_extension(g, VertexSet::of({0, 1, 2, 3, 4}), 4);
    CHECK(res.status == SearchStatus::absent);
}

TEST_CASE("find_extension validates its preconditions") {
    auto c5 = corpus::cycle(5);
    CHECK_THROWS_AS(find_extension(c5, VertexSet::of({0, 1, 2, 3, 4}), 2), input_error);
    // certified at k=3, but |H| = 5 > 2k-2 = 4
    CHECK_THROWS_AS(find_extension(c5, VertexSet::of({0, 1, 2, 3, 4}), 3), input_error);
}

TEST_CASE("apply_extension with a single-anchor even path") {
    // triangle 0,1,2 plus the even path 3-4, both ends adjacent to anchor 0
    Graph g = Graph::from_edge_list(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {0, 3}, {0, 4}});
    ExtensionStep step;
    step.pattern = ExtensionPattern::single_anchor_even_path;
    step.anchors = {0};
    step.path = PathWitness{{3, 4}};
    auto grown = apply_extension(g, VertexSet::of({0, 1, 2}), step, 4);
    CHECK(grown == VertexSet::of({0, 1, 2, 3, 4}));
    auto cert = certify_strong_2k_core(g, grown, 4);
    REQUIRE(cert);
    CHECK(validate_core_certificate(g, *cert));

    // the same step violates the order bound when k = 2: 2k - |H| = 1
    CHECK_THROWS_AS(apply_extension(g, VertexSet::of({0, 1, 2}), step, 2), input_error);
}

TEST_CASE("apply_extension rejects malformed steps") {
    auto k5 = corpus::complete(5);
    ExtensionStep bad;
    bad.pattern = ExtensionPattern::two_anchor_single_vertex;
    bad.anchors = {0, 0};
    bad.path = PathWitness{{3}};
    CHECK_THROWS_AS(apply_extension(k5, VertexSet::of({0, 1, 2}), bad, 5), input_error);

    ExtensionStep overlapping;
    overlapping.pattern = ExtensionPattern::two_anchor_single_vertex;
    overlapping.anchors = {0, 1};
    overlapping.path = PathWitness{{2}}; // inside the core
    CHECK_THROWS_AS(apply_extension(k5, VertexSet::of({0, 1, 2}), overlapping, 5), input_error);
}

TEST_CASE("greedy_max_strong_core") {
    auto bc = bc_construction(1, 12);
    auto res = greedy_max_strong_core(bc.graph, 5);
    REQUIRE(res.seeded);
    CHECK(res.core == VertexSet(bc.selected));
    CHECK(res.trace.empty());

    auto k6 = corpus::complete(6);
    auto grown = greedy_max_strong_core(k6, 5);
    REQUIRE(grown.seeded);
    CHECK(grown.core.size() == 6);
    CHECK(grown.trace.size() == 3); // triangle seed plus three single-vertex steps

    auto c7 = corpus::cycle(7);
    auto no_seed = greedy_max_strong_core(c7, 2);
    CHECK(!no_seed.seeded);
    CHECK(no_seed.diagnostic.find("odd girth") != std::string::npos);

    auto bip = greedy_max_strong_core(complete_bipartite(3, 3), 4);
    CHECK(!bip.seeded);
    CHECK(bip.diagnostic.find("bipartite") != std::string::npos);
}

TEST_CASE("every greedy trace prefix re-certifies (extension soundness)") {
    for (const auto& [name, g] : corpus::small_fixtures()) {
        if (g.vertex_count() > 12) continue;
        for (int k = 3; k <= 6; ++k) {
            CAPTURE(name);
            CAPTURE(k);
            auto res = greedy_max_strong_core(g, k);
            if (!res.seeded) continue;
            VertexSet h = res.core;
            // rebuild from the seed and re-certify after every step
            auto og = odd_girth(g);
            REQUIRE(og);
            VertexSet cur(og->witness.vertices);
            REQUIRE(certify_strong_2k_core(g, cur, k));
            for (const auto& step : res.trace) {
                cur = apply_extension(g, cur, step, k);
                auto cert = certify_strong_2k_core(g, cur, k);
                REQUIRE(cert);
                CHECK(validate_core_certificate(g, *cert));
            }
            CHECK(cur == res.core);
        }
    }
}

TEST_CASE("exact_maximum_strong_core") {
    CHECK(exact_maximum_strong_core(corpus::complete(4), 3).size() == 4);

    // C5 with one chord: the triangle is the only strong-4-core
    Graph chord = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    auto best = exact_maximum_strong_core(chord, 2);
    CHECK(best == VertexSet::of({0, 1, 2}));

    CHECK(exact_maximum_strong_core(complete_bipartite(3, 3), 4).empty());

    CHECK_THROWS_AS(exact_maximum_strong_core(turan_graph(2, 18), 3), input_error);
}

TEST_CASE("exact maximum cores on the extremal fixtures") {
    CHECK(exact_maximum_strong_core(g_construction(3, 16).graph, 5).size() == 4);
    CHECK(exact_maximum_strong_core(g_construction(3, 8).graph, 5).size() == 4);
    CHECK(exact_maximum_strong_core(bc_construction(1, 12).graph, 5).size() == 3);
    CHECK(exact_maximum_strong_core(bc_construction(3, 14).graph, 5).size() == 7);
    CHECK(exact_maximum_2k_core(corpus::complete(6), 5).size() == 6);
}

TEST_CASE("extension search reports budget exhaustion distinctly") {
    // C5 plus a pendant: the scan finds nothing at order 1 and then runs out
    Graph g = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
    auto res = find_extension(g, VertexSet::of({0, 1, 2, 3, 4}), 4, /*budget=*/1);
    CHECK(res.status == SearchStatus::budget_exceeded);
    CHECK(!res.step);
}

namespace {

// strong-core check through the independent path enumerator
bool strong_core_naive(const Graph& g, const VertexList& ids, int k) {
    auto sub = induced_subgraph(g, VertexSet(ids));
    int l = sub.graph.vertex_count();
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            auto orders = oracle::simple_path_orders(sub.graph, i, j, 2 * k);
            bool even = false, odd = false;
            for (int o : orders) (o % 2 == 0 ? even : odd) = true;
            if (!even || !odd) return false;
        }
    return true;
}

VertexList max_strong_core_naive(const Graph& g, int k) {
    const int n = g.vertex_count();
    VertexList best;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        VertexList ids;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) ids.push_back(v);
        if (static_cast<int>(ids.size()) < 3 ||
            static_cast<int>(ids.size()) <= static_cast<int>(best.size()))
            continue;
        if (strong_core_naive(g, ids, k)) best = ids;
    }
    return best;
}

} // namespace

TEST_CASE("exact maximum core agrees with subset enumeration on random graphs") {
    std::mt19937 rng(90210);
    std::uniform_int_distribution<int> nd(4, 8), pd(25, 75), kd(2, 5);
    for (int i = 0; i < 60; ++i) {
        Graph g = corpus::random_connected(nd(rng), pd(rng), rng);
        int k = kd(rng);
        auto exact = exact_maximum_strong_core(g, k);
        auto naive = max_strong_core_naive(g, k);
        CHECK(exact.size() == static_cast<int>(naive.size()));
        if (!exact.empty()) CHECK(strong_core_naive(g, exact.ids(), k));
    }
}

TEST_CASE("greedy core size never exceeds the exact maximum") {
    for (const auto& [name, g] : corpus::small_fixtures()) {
        if (g.vertex_count() > 14) continue;
        for (int k : {3, 5}) {
            CAPTURE(name);
            CAPTURE(k);
            auto greedy = greedy_max_strong_core(g, k);
            auto exact = exact_maximum_strong_core(g, k);
            if (greedy.seeded) CHECK(greedy.core.size() <= exact.size());
        }
    }
}
