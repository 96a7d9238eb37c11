#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddcore/parity.hpp"
#include "oddcore/constructions.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <random>

using namespace oddcore;

TEST_CASE("odd cycle family parameters") {
    OddCycleFamily f({5, 7, 9});
    CHECK(f.p() == 1); // C_3 is the shortest odd cycle not in the family
    CHECK(f.k() == 4);

    OddCycleFamily g({3, 5, 9});
    CHECK(g.p() == 3); // C_7 missing
    CHECK(g.k() == 4);

    CHECK_THROWS_AS(OddCycleFamily({}), input_error);
    CHECK_THROWS_AS(OddCycleFamily({4}), input_error);
    CHECK_THROWS_AS(OddCycleFamily({1}), input_error);
}

TEST_CASE("odd_girth on named graphs") {
    REQUIRE(odd_girth(corpus::petersen()));
    CHECK(odd_girth(corpus::petersen())->length == 5);
    CHECK(oracle::odd_girth_naive(corpus::petersen()) == 5);

    CHECK(!odd_girth(complete_bipartite(3, 3)).has_value());

    auto bc = bc_construction(2, 20).graph;
    auto og = odd_girth(bc);
    REQUIRE(og);
    CHECK(og->length == 5);
    CHECK(validate_cycle_witness(bc, og->witness));
    CHECK(og->witness.length() == 5);
}

TEST_CASE("odd_girth agrees with naive cycle enumeration on the corpus") {
    for (const auto& [name, g] : corpus::small_fixtures()) {
        if (g.vertex_count() > 14) continue;
        CAPTURE(name);
        auto fast = odd_girth(g);
        auto naive = oracle::odd_girth_naive(g);
        CHECK(fast.has_value() == naive.has_value());
        if (fast) CHECK(fast->length == *naive);
    }
}

TEST_CASE("contains_cycle_of_length") {
    auto c7 = corpus::cycle(7);
    auto found = contains_cycle_of_length(c7, 7);
    REQUIRE(found.found());
    CHECK(validate_cycle_witness(c7, *found.witness));
    CHECK(found.witness->length() == 7);

    // G_{r+1} has no odd cycle longer than r+1
    auto gc = g_construction(3, 16).graph;
    CHECK(contains_cycle_of_length(gc, 11).absent());

    // blow-ups contain longer odd cycles by zig-zagging inside parts
    auto blow = cycle_blowup(5, 2);
    auto c7_in_blowup = contains_cycle_of_length(blow, 7);
    REQUIRE(c7_in_blowup.found());
    CHECK(validate_cycle_witness(blow, *c7_in_blowup.witness));

    CHECK_THROWS_AS(contains_cycle_of_length(c7, 2), input_error);
}

TEST_CASE("contains_cycle_of_length agrees with naive enumeration") {
    for (const auto& [name, g] : corpus::small_fixtures()) {
        if (g.vertex_count() > 12) continue;
        CAPTURE(name);
        auto lengths = oracle::cycle_lengths(g);
        for (int L = 3; L <= g.vertex_count(); ++L) {
            auto res = contains_cycle_of_length(g, L);
            REQUIRE(res.status != SearchStatus::budget_exceeded);
            CHECK(res.found() == (lengths.count(L) == 1));
            if (res.found()) {
                CHECK(validate_cycle_witness(g, *res.witness));
                CHECK(res.witness->length() == L);
            }
        }
    }
}

TEST_CASE("search outcomes are invariant under relabeling") {
    std::mt19937 rng(7);
    auto graphs = corpus::small_fixtures();
    for (const auto& [name, g] : graphs) {
        if (g.vertex_count() > 12 || g.vertex_count() < 3) continue;
        CAPTURE(name);
        VertexList perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> relabeled;
        for (const auto& [u, v] : g.edges()) relabeled.emplace_back(perm[u], perm[v]);
        Graph h = Graph::from_edge_list(g.vertex_count(), relabeled);
        for (int L = 3; L <= g.vertex_count(); ++L)
            CHECK(contains_cycle_of_length(g, L).found() ==
                  contains_cycle_of_length(h, L).found());
    }
}

TEST_CASE("is_family_free") {
    CHECK(is_family_free(bc_construction(1, 12).graph, OddCycleFamily({5, 7, 9})).free());

    auto hit = is_family_free(corpus::complete(4), OddCycleFamily({3}));
    CHECK(!hit.free());
    CHECK(hit.violated_length == 3);
    CHECK(validate_cycle_witness(corpus::complete(4), *hit.witness));

    CHECK(is_family_free(cycle_blowup(7, 1), OddCycleFamily({5})).free());
}

TEST_CASE("parity_path_exists on C5") {
    auto c5 = corpus::cycle(5);

    auto even_adj = parity_path_exists(c5, 0, 1, Parity::even, 4);
    REQUIRE(even_adj.found());
    CHECK(even_adj.witness->order() == 2);

    // the only odd 0-1 path has order 5 > 4
    CHECK(parity_path_exists(c5, 0, 1, Parity::odd, 4).absent());
    CHECK(parity_path_exists(c5, 0, 1, Parity::odd, 5).found());

    // distance-2 endpoints: the long way around has order 4
    auto even_far = parity_path_exists(c5, 0, 2, Parity::even, 4);
    REQUIRE(even_far.found());
    CHECK(even_far.witness->order() == 4);

    CHECK_THROWS_AS(parity_path_exists(c5, 0, 0, Parity::even, 4), input_error);
    CHECK_THROWS_AS(parity_path_exists(c5, 0, 1, Parity::even, 4, VertexSet::of({1})),
                    input_error);
}

TEST_CASE("parity_path_exists honors the forbidden set") {
    auto c5 = corpus::cycle(5);
    // without vertex 1 the only 0-2 route is the long way (order 4)
    auto res = parity_path_exists(c5, 0, 2, Parity::even, 5, VertexSet::of({1}));
    REQUIRE(res.found());
    CHECK(res.witness->vertices == VertexList{0, 4, 3, 2});
    CHECK(parity_path_exists(c5, 0, 2, Parity::odd, 5, VertexSet::of({1})).absent());
}

TEST_CASE("parity_path_exists agrees with full path enumeration") {
    auto graphs = corpus::small_fixtures();
    std::vector<Graph> sample;
    for (const auto& [name, g] : graphs)
        if (g.vertex_count() <= 11) sample.push_back(g);
    auto random = corpus::random_connected_corpus(60, 9, 20240811);
    sample.insert(sample.end(), random.begin(), random.end());

    for (const auto& g : sample) {
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
                auto orders = oracle::simple_path_orders(g, u, v, 8);
                for (int bound = 2; bound <= 8; ++bound) {
                    for (Parity par : {Parity::even, Parity::odd}) {
                        bool expected = false;
                        for (int o : orders)
                            if (o <= bound && parity_of_order(o) == par) expected = true;
                        auto res = parity_path_exists(g, u, v, par, bound);
                        REQUIRE(res.status != SearchStatus::budget_exceeded);
                        CHECK(res.found() == expected);
                        if (res.found()) {
                            CHECK(validate_path_witness(g, *res.witness));
                            CHECK(res.witness->order() <= bound);
                            CHECK(res.witness->parity() == par);
                            CHECK(res.witness->front() == u);
                            CHECK(res.witness->back() == v);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("odd_girth equals the least odd length reported by cycle search") {
    for (const auto& [name, g] : corpus::small_fixtures()) {
        if (g.vertex_count() > 12) continue;
        CAPTURE(name);
        std::optional<int> least;
        for (int L = 3; L <= g.vertex_count() && !least; L += 2)
            if (contains_cycle_of_length(g, L).found()) least = L;
        auto og = odd_girth(g);
        CHECK(og.has_value() == least.has_value());
        if (og) CHECK(og->length == *least);
    }
}

TEST_CASE("exists_path_of_exact_order") {
    auto c5 = corpus::cycle(5);
    CHECK(exists_path_of_exact_order(c5, 0, 1, 2).found());
    CHECK(exists_path_of_exact_order(c5, 0, 1, 5).found());
    CHECK(exists_path_of_exact_order(c5, 0, 1, 3).absent());
    CHECK(exists_path_of_exact_order(c5, 0, 1, 6).absent());
}

TEST_CASE("budget exhaustion is reported, never conflated with absent") {
    auto big = corpus::complete(9);
    auto res = contains_cycle_of_length(big, 9, 5);
    CHECK(res.status == SearchStatus::budget_exceeded);
    CHECK(res.nodes_explored >= 5);
}
