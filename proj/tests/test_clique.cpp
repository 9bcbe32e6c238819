#include "oracles.hpp"

#include <cliqueval/clique.hpp>
#include <cliqueval/generators.hpp>

#include <doctest.h>

#include <random>

using namespace cliqueval;

namespace
{
    auto as_lists(const std::vector<Clique> & cs)
    {
        std::vector<std::vector<Vertex>> out;
        for (const auto & c : cs)
            out.push_back(c.vertices());
        return out;
    }

    auto path3() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}}); }
}

TEST_CASE("enumerate_cliques on small named graphs")
{
    auto g1 = oracle::g1();
    CHECK(as_lists(enumerate_cliques(g1, 3)) == std::vector<std::vector<Vertex>>{{0, 1, 2}});
    CHECK(enumerate_cliques(complete_graph(4), 2).size() == 6);
    CHECK(enumerate_cliques(complete_graph(4), 3).size() == 4);
    CHECK(enumerate_cliques(complete_graph(4), 5).empty());
    CHECK(enumerate_cliques(g1, 1).size() == 4);
    CHECK_THROWS_AS(enumerate_cliques(g1, 0), Error);
}

TEST_CASE("enumerate_cliques matches subset enumeration in canonical order")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        auto n = 1 + rng() % 12;
        auto g = gnp_graph(n, 0.2 + 0.07 * (i % 10), rng());
        for (std::size_t k = 1; k <= 6; ++k)
            REQUIRE(as_lists(enumerate_cliques(g, k)) == oracle::cliques(g, k));
    }
}

TEST_CASE("enumeration is deterministic")
{
    auto g = gnp_graph(14, 0.5, 99);
    CHECK(as_lists(enumerate_cliques(g, 3)) == as_lists(enumerate_cliques(g, 3)));
}

TEST_CASE("degeneracy order breaks ties by vertex id")
{
    CHECK(degeneracy_order(complete_graph(4)) == std::vector<Vertex>{0, 1, 2, 3});
    // star: leaves (degree 1) go first, centre last once its degree drops
    auto star = complete_bipartite_graph(1, 3);
    CHECK(degeneracy_order(star) == std::vector<Vertex>{1, 2, 0, 3});
}

TEST_CASE("Clique validation")
{
    auto g = oracle::g1();
    auto q = Clique::in(g, {2, 1, 0});
    CHECK(q.vertices() == std::vector<Vertex>{0, 1, 2});
    CHECK(q.order() == 3);
    CHECK_THROWS_AS(Clique::in(g, {0, 3}), Error);
    CHECK_THROWS_AS(Clique::in(g, {0, 0}), Error);
    CHECK_THROWS_AS(Clique::in(g, {}), Error);
    CHECK_THROWS_AS(Clique::in(g, {7}), Error);
}

TEST_CASE("clique_value on the worked example")
{
    auto g = oracle::g1();
    CHECK(clique_value(g, Clique::in(g, {0, 1})) == 1);
    CHECK(clique_value(g, Clique::in(g, {0, 2})) == 1);
    CHECK(clique_value(g, Clique::in(g, {1, 2})) == 1);
    CHECK(clique_value(g, Clique::in(g, {2, 3})) == 0);
    CHECK(clique_value(g, Clique::in(g, {2})) == 3);

    auto k6 = complete_graph(6);
    for (std::size_t k = 1; k <= 6; ++k)
        for (const auto & q : enumerate_cliques(k6, k))
            CHECK(clique_value(k6, q) == 6 - k);

    // a clique of another graph is rejected
    auto k4 = complete_graph(4);
    CHECK_THROWS_AS(clique_value(g, Clique::in(k4, {0, 3})), Error);
}

TEST_CASE("clique_census")
{
    CHECK(clique_census(oracle::g1()).counts == std::vector<std::uint64_t>{4, 4, 1});
    CHECK(clique_census(oracle::g1()).clique_number() == 3);
    CHECK(clique_census(complete_graph(5)).counts == std::vector<std::uint64_t>{5, 10, 10, 5, 1});
    auto c5 = clique_census(cycle_graph(5));
    CHECK(c5.counts == std::vector<std::uint64_t>{5, 5});
    CHECK(c5.clique_number() == 2);
    CHECK(c5.count(3) == 0);

    auto edgeless = clique_census(Graph::from_edge_list(4, {}));
    CHECK(edgeless.counts == std::vector<std::uint64_t>{4});
    CHECK(edgeless.clique_number() == 1);
    auto null = clique_census(Graph::from_edge_list(0, {}));
    CHECK(null.counts.empty());
    CHECK(null.clique_number() == 0);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        auto g = gnp_graph(1 + rng() % 11, 0.55, rng());
        auto census = clique_census(g);
        REQUIRE(census.count(1) == g.vertex_count());
        REQUIRE(census.count(2) == g.edge_count());
        for (std::size_t k = 1; k <= census.clique_number() + 1; ++k)
            REQUIRE(census.count(k) == oracle::clique_count(g, k));
    }
}

TEST_CASE("handshaking identity")
{
    auto g = oracle::g1();
    auto r = verify_handshaking(g, 2);
    CHECK(r.value_sum == 3);
    CHECK(r.rhs == 3);
    CHECK(r.equal);

    auto k222 = turan_graph(6, 3);
    auto r2 = verify_handshaking(k222, 2);
    CHECK(r2.value_sum == 24);
    CHECK(r2.rhs == 24);

    CHECK_THROWS_AS(verify_handshaking(g, 0), Error);

    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
        auto g = gnp_graph(1 + rng() % 12, 0.6, rng());
        auto one = verify_handshaking(g, 1);
        REQUIRE(one.value_sum == 2 * g.edge_count());
        for (std::size_t k = 1; k <= 5; ++k) {
            auto h = verify_handshaking(g, k);
            REQUIRE(h.equal);
            // both sides recomputed by brute force
            std::uint64_t sum = 0;
            for (const auto & q : oracle::cliques(g, k))
                sum += oracle::common_neighbours(g, q);
            REQUIRE(h.value_sum == sum);
            REQUIRE(h.rhs == (k + 1) * oracle::clique_count(g, k + 1));
        }
    }
}

TEST_CASE("subgraph_count worked examples")
{
    CHECK(subgraph_count(complete_graph(2), path3()) == 2);
    CHECK(subgraph_count(complete_graph(3), complete_graph(4)) == 4);
    CHECK(subgraph_count(path3(), complete_graph(3)) == 3);
    CHECK(subgraph_count(cycle_graph(4), complete_graph(4)) == 3);
    CHECK(subgraph_count(complete_graph(4), complete_graph(3)) == 0);

    CHECK_THROWS_AS(subgraph_count(Graph::from_edge_list(0, {}), complete_graph(3)), Error);
    CHECK_THROWS_AS(subgraph_count(complete_graph(9), complete_graph(9)), Error);
}

TEST_CASE("subgraph_count agrees with vertex/edge-subset enumeration")
{
    std::vector<Graph> patterns{complete_graph(2), path3(), complete_graph(3), cycle_graph(4),
        complete_bipartite_graph(1, 3), Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}),
        Graph::from_edge_list(3, {{0, 1}})};
    std::mt19937_64 rng(31);
    for (int i = 0; i < 25; ++i) {
        auto g = gnp_graph(4 + rng() % 4, 0.5, rng());
        for (const auto & h : patterns)
            REQUIRE(subgraph_count(h, g) == oracle::subgraph_count(h, g));
    }
}

TEST_CASE("Kelly identity")
{
    auto r = verify_kelly(complete_graph(2), path3());
    CHECK(r.lhs == 2);
    CHECK(r.rhs == 2);
    CHECK(r.per_vertex == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(r.equal);

    auto r2 = verify_kelly(complete_graph(3), complete_graph(4));
    CHECK(r2.lhs == 4);
    CHECK(r2.per_vertex == std::vector<std::uint64_t>{1, 1, 1, 1});
    CHECK(r2.equal);

    auto r3 = verify_kelly(complete_graph(2), complete_graph(2));
    CHECK(r3.lhs == 0);
    CHECK(r3.rhs == 0);
    CHECK(r3.equal);

    try {
        verify_kelly(complete_graph(2), Graph::from_edge_list(3, {{0, 1}}));
        FAIL("expected ineligible");
    }
    catch (const Error & e) {
        CHECK(e.kind() == ErrorKind::ineligible);
    }
    CHECK_THROWS_AS(verify_kelly(complete_graph(4), complete_graph(3)), Error);
}
