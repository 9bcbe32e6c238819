#include "oracles.hpp"

#include <cliqueval/generators.hpp>
#include <cliqueval/graph.hpp>

#include <doctest.h>

#include <random>

using namespace cliqueval;

TEST_CASE("from_edge_list builds the worked example graph")
{
    // 1-based pairs (1,2),(1,3),(2,3),(3,4) stored 0-based
    auto g = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.adjacent(2, 3));
    CHECK(g.adjacent(3, 2));
    CHECK_FALSE(g.adjacent(0, 3));

    auto single = Graph::from_edge_list(1, {});
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);
}

TEST_CASE("from_edge_list rejects malformed input naming the pair")
{
    auto message = [](auto && fn) -> std::string {
        try {
            fn();
        }
        catch (const Error & e) {
            return e.what();
        }
        return "";
    };
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), Error);
    CHECK(message([] { Graph::from_edge_list(3, {{0, 0}}); }).find("loop at edge (0,0)") != std::string::npos);
    CHECK(message([] { Graph::from_edge_list(3, {{0, 3}}); }).find("(0,3)") != std::string::npos);
    CHECK(message([] { Graph::from_edge_list(3, {{0, 1}, {1, 0}}); }).find("duplicate edge (1,0)") != std::string::npos);
    CHECK(message([] { Graph::from_edge_list(3, {{1, 2}, {1, 2}}); }).find("duplicate") != std::string::npos);
}

TEST_CASE("neighborhood")
{
    auto g = oracle::g1();
    auto n3 = g.neighborhood(2).members();
    CHECK(n3 == std::vector<Vertex>{0, 1, 3});
    CHECK(g.degree(2) == 3);

    auto isolated = Graph::from_edge_list(3, {{0, 1}});
    CHECK(isolated.neighborhood(2).empty());
    CHECK(isolated.has_isolated_vertex());

    auto k5 = complete_graph(5);
    for (Vertex v = 0; v < 5; ++v) {
        CHECK(k5.degree(v) == 4);
        CHECK_FALSE(k5.neighborhood(v).contains(v));
    }
    CHECK_THROWS_AS(g.neighborhood(4), Error);
}

TEST_CASE("without_vertex relabels downward")
{
    auto p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(p3.without_vertex(1).edge_count() == 0);
    auto rest = p3.without_vertex(0);
    CHECK(rest.vertex_count() == 2);
    CHECK(rest.adjacent(0, 1));
}

TEST_CASE("graph6 decoding of fixed strings")
{
    auto k4 = decode_graph6("C~");
    CHECK(k4 == complete_graph(4));
    CHECK(k4.edge_count() == 6);

    auto empty = decode_graph6("C?");
    CHECK(empty.vertex_count() == 4);
    CHECK(empty.edge_count() == 0);

    CHECK(decode_graph6("?").vertex_count() == 0);
    CHECK(decode_graph6("@").vertex_count() == 1);

    // strings produced by the bit-string reference encoder
    CHECK(encode_graph6(book_graph(3)) == "D}o");
    CHECK(encode_graph6(cycle_graph(5)) == "Dhc");
    CHECK(encode_graph6(oracle::petersen()) == "IheA@GUAo");
}

TEST_CASE("graph6 rejects bad input")
{
    CHECK_THROWS_AS(decode_graph6(""), Error);
    CHECK_THROWS_AS(decode_graph6("C"), Error);          // payload too short
    CHECK_THROWS_AS(decode_graph6("C~~"), Error);        // payload too long
    CHECK_THROWS_AS(decode_graph6("C\x01"), Error);      // non-printable
    CHECK_THROWS_AS(decode_graph6("~"), Error);          // long-form header
    CHECK_THROWS_AS(decode_graph6("B@"), Error);         // nonzero padding: n=3 uses 3 of 6 bits
    CHECK_THROWS_AS(encode_graph6(Graph::from_edge_list(63, {})), Error);
}

TEST_CASE("graph6 agrees with the reference encoder and round-trips")
{
    for (std::size_t n = 0; n <= 5; ++n)
        LabeledGraphStream(n).for_each([&](std::uint64_t, const Graph & g) {
            auto text = encode_graph6(g);
            REQUIRE(text == oracle::graph6(g));
            REQUIRE(decode_graph6(text) == g);
            REQUIRE(encode_graph6(decode_graph6(text)) == text);
        });

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto g = gnp_graph(10 + rng() % 53, 0.4, rng());
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("edge-list text format")
{
    auto g = parse_edge_list("4 4\n1 2\n1 3\n2 3\n3 4\n", true);
    CHECK(g == oracle::g1());
    CHECK(format_edge_list(g) == "4 4\n0 1\n0 2\n1 2\n2 3\n");
    CHECK(format_edge_list(g, true) == "4 4\n1 2\n1 3\n2 3\n3 4\n");
    CHECK(parse_edge_list(format_edge_list(g)) == g);

    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), Error);        // missing edge
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), Error);   // trailing data
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), Error);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n", true), Error);  // id 0 in one-based input
}

TEST_CASE("generator families")
{
    auto k33 = turan_graph(6, 2);
    CHECK(k33 == complete_bipartite_graph(3, 3));
    CHECK(k33.edge_count() == 9);

    auto k222 = turan_graph(6, 3);
    CHECK(k222.edge_count() == 12);
    CHECK(oracle::clique_count(k222, 3) == 8);

    auto b3 = book_graph(3);
    CHECK(b3.vertex_count() == 5);
    CHECK(b3.edge_count() == 7);
    CHECK(b3.adjacent(0, 1));
    CHECK(oracle::clique_count(b3, 3) == 3);

    // 7 = 3+2+2: first part {0,1,2}
    auto t73 = turan_graph(7, 3);
    CHECK_FALSE(t73.adjacent(0, 2));
    CHECK(t73.adjacent(2, 3));
    CHECK_FALSE(t73.adjacent(3, 4));
    CHECK(t73.edge_count() == 16);

    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_graph(6).edge_count() == 15);
    CHECK(turan_graph(5, 5) == complete_graph(5));

    CHECK_THROWS_AS(turan_graph(3, 4), Error);
    CHECK_THROWS_AS(turan_graph(3, 0), Error);
    CHECK_THROWS_AS(cycle_graph(2), Error);
    CHECK_THROWS_AS(gnp_graph(5, 1.5, 0), Error);
}

TEST_CASE("generate parses specs")
{
    CHECK(generate("turan:6,2") == turan_graph(6, 2));
    CHECK(generate("book:3") == book_graph(3));
    CHECK(generate("bipartite:1,5") == complete_bipartite_graph(1, 5));
    CHECK(generate("complete:4") == complete_graph(4));
    CHECK(generate("cycle:7") == cycle_graph(7));
    CHECK(generate("gnp:9,0.5", 3) == gnp_graph(9, 0.5, 3));
    CHECK_THROWS_AS(generate("petersen:10"), Error);
    CHECK_THROWS_AS(generate("turan:6"), Error);
    CHECK_THROWS_AS(generate("turan:6,x"), Error);
    CHECK_THROWS_AS(generate("gnp:6,abc"), Error);
    CHECK_THROWS_AS(generate("book"), Error);
}

TEST_CASE("gnp is seed-deterministic")
{
    CHECK(gnp_graph(20, 0.3, 42) == gnp_graph(20, 0.3, 42));
    int differing = 0;
    for (std::uint64_t s = 0; s < 20; ++s)
        differing += gnp_graph(20, 0.3, s) == gnp_graph(20, 0.3, s + 1) ? 0 : 1;
    CHECK(differing >= 19);
    CHECK(gnp_graph(8, 0.0, 1).edge_count() == 0);
    CHECK(gnp_graph(8, 1.0, 1).edge_count() == 28);
}

TEST_CASE("labeled graph stream")
{
    CHECK(LabeledGraphStream(3).size() == 8);
    CHECK(LabeledGraphStream(4).size() == 64);
    CHECK(LabeledGraphStream(6).size() == 32768);
    CHECK_THROWS_AS(LabeledGraphStream(8), Error);

    std::uint64_t seen = 0, previous = 0;
    std::vector<std::string> codes;
    LabeledGraphStream(4).for_each([&](std::uint64_t mask, const Graph & g) {
        if (seen)
            CHECK(mask == previous + 1);
        previous = mask;
        ++seen;
        CHECK(g.edge_count() == static_cast<std::uint64_t>(__builtin_popcountll(mask)));
        codes.push_back(encode_graph6(g));
    });
    CHECK(seen == 64);
    std::sort(codes.begin(), codes.end());
    CHECK(std::unique(codes.begin(), codes.end()) == codes.end());

    // bit 0 is the pair (0,1), bit 2 is (1,2)
    CHECK(graph_from_mask(3, 1).adjacent(0, 1));
    CHECK(graph_from_mask(3, 4).adjacent(1, 2));
}

TEST_CASE("structural invariants over every small graph")
{
    for (std::size_t n = 1; n <= 5; ++n)
        LabeledGraphStream(n).for_each([&](std::uint64_t, const Graph & g) {
            std::uint64_t degree_sum = 0;
            for (Vertex u = 0; u < n; ++u) {
                REQUIRE_FALSE(g.adjacent(u, u));
                for (Vertex v = 0; v < n; ++v)
                    REQUIRE(g.adjacent(u, v) == g.adjacent(v, u));
                degree_sum += g.degree(u);
            }
            REQUIRE(degree_sum == 2 * g.edge_count());
            REQUIRE(g.edges().size() == g.edge_count());
        });
}
