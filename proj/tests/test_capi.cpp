// Exercises the exported C interface only.
#include <cliqueval/cliqueval.h>

#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

namespace
{
    struct Graph {
        cqv_graph * handle = nullptr;
        ~Graph() { cqv_graph_free(handle); }
    };

    auto take(char * s) -> std::string
    {
        std::string out(s);
        cqv_string_free(s);
        return out;
    }
}

TEST_CASE("graph handles and codecs")
{
    const uint32_t edges[] = {0, 1, 0, 2, 1, 2, 2, 3};
    Graph g;
    REQUIRE(cqv_graph_from_edges(4, edges, 4, &g.handle) == CQV_OK);
    CHECK(cqv_graph_vertex_count(g.handle) == 4);
    CHECK(cqv_graph_edge_count(g.handle) == 4);

    uint32_t nb[4];
    size_t count = 0;
    CHECK(cqv_graph_neighborhood(g.handle, 2, nb, 4, &count) == CQV_OK);
    CHECK(count == 3);
    CHECK(nb[0] == 0);
    CHECK(nb[2] == 3);
    CHECK(cqv_graph_neighborhood(g.handle, 2, nb, 2, &count) == CQV_E_BUFFER_TOO_SMALL);
    CHECK(count == 3);
    CHECK(cqv_graph_neighborhood(g.handle, 9, nb, 4, &count) == CQV_E_OUT_OF_RANGE);

    char * text = nullptr;
    REQUIRE(cqv_graph_to_graph6(g.handle, &text) == CQV_OK);
    auto g6 = take(text);
    Graph back;
    REQUIRE(cqv_graph_from_graph6(g6.c_str(), &back.handle) == CQV_OK);
    REQUIRE(cqv_graph_to_edge_list_text(back.handle, 1, &text) == CQV_OK);
    CHECK(take(text) == "4 4\n1 2\n1 3\n2 3\n3 4\n");

    Graph k4;
    REQUIRE(cqv_graph_from_graph6("C~\n", &k4.handle) == CQV_OK);
    CHECK(cqv_graph_edge_count(k4.handle) == 6);
}

TEST_CASE("error codes and messages")
{
    cqv_graph * g = nullptr;
    const uint32_t loop[] = {1, 1};
    CHECK(cqv_graph_from_edges(3, loop, 1, &g) == CQV_E_INVALID_ARGUMENT);
    CHECK(g == nullptr);
    CHECK(std::string(cqv_last_error()).find("loop") != std::string::npos);

    CHECK(cqv_graph_from_graph6("C", &g) == CQV_E_PARSE);
    CHECK(cqv_graph_from_edge_list_text("2 1\n0 5\n", 0, &g) == CQV_E_OUT_OF_RANGE);
    CHECK(cqv_graph_generate("turan:3,4", 0, &g) == CQV_E_INVALID_ARGUMENT);
    CHECK(cqv_graph_from_graph6(nullptr, &g) == CQV_E_INVALID_ARGUMENT);
    CHECK(std::strcmp(cqv_status_name(CQV_E_INELIGIBLE), "ineligible input") == 0);
}

TEST_CASE("cliques, handshaking and Kelly through the C API")
{
    Graph g;
    REQUIRE(cqv_graph_from_edge_list_text("4 4\n1 2\n1 3\n2 3\n3 4\n", 1, &g.handle) == CQV_OK);
    uint64_t census[8];
    size_t len = 0;
    REQUIRE(cqv_clique_census(g.handle, census, 8, &len) == CQV_OK);
    CHECK(len == 3);
    CHECK(census[0] == 4);
    CHECK(census[1] == 4);
    CHECK(census[2] == 1);
    CHECK(cqv_clique_census(g.handle, census, 2, &len) == CQV_E_BUFFER_TOO_SMALL);

    const uint32_t e34[] = {2, 3}, e12[] = {1, 0}, bad[] = {0, 3};
    uint64_t value = 99;
    CHECK(cqv_clique_value(g.handle, e34, 2, &value) == CQV_OK);
    CHECK(value == 0);
    CHECK(cqv_clique_value(g.handle, e12, 2, &value) == CQV_OK);
    CHECK(value == 1);
    CHECK(cqv_clique_value(g.handle, bad, 2, &value) == CQV_E_INVALID_ARGUMENT);

    uint64_t triangles = 0;
    CHECK(cqv_clique_count(g.handle, 3, &triangles) == CQV_OK);
    CHECK(triangles == 1);

    cqv_handshaking h{};
    REQUIRE(cqv_verify_handshaking(g.handle, 2, &h) == CQV_OK);
    CHECK(h.value_sum == 3);
    CHECK(h.rhs == 3);
    CHECK(h.equal == 1);

    Graph k2, p3, k3;
    REQUIRE(cqv_graph_generate("complete:2", 0, &k2.handle) == CQV_OK);
    REQUIRE(cqv_graph_from_edge_list_text("3 2\n0 1\n1 2\n", 0, &p3.handle) == CQV_OK);
    REQUIRE(cqv_graph_generate("complete:3", 0, &k3.handle) == CQV_OK);
    uint64_t s = 0;
    CHECK(cqv_subgraph_count(p3.handle, k3.handle, &s) == CQV_OK);
    CHECK(s == 3);
    cqv_kelly kelly{};
    CHECK(cqv_verify_kelly(k2.handle, p3.handle, &kelly) == CQV_OK);
    CHECK(kelly.lhs == 2);
    CHECK(kelly.rhs == 2);
    CHECK(kelly.equal == 1);

    Graph with_isolated;
    REQUIRE(cqv_graph_from_edge_list_text("3 1\n0 1\n", 0, &with_isolated.handle) == CQV_OK);
    CHECK(cqv_verify_kelly(k2.handle, with_isolated.handle, &kelly) == CQV_E_INELIGIBLE);
}

TEST_CASE("packings, bounds and proof chains through the C API")
{
    Graph book;
    REQUIRE(cqv_graph_generate("book:3", 0, &book.handle) == CQV_OK);

    cqv_packing * p = nullptr;
    REQUIRE(cqv_max_clique_packing(book.handle, 2, nullptr, &p) == CQV_OK);
    CHECK(cqv_packing_size(p) == 2);
    CHECK(cqv_packing_order(p) == 2);
    CHECK(cqv_packing_optimal(p) == 1);
    uint32_t member[2];
    CHECK(cqv_packing_member(p, 1, member, 2) == CQV_OK);
    CHECK(member[0] == 1);
    CHECK(member[1] == 3);
    CHECK(cqv_packing_member(p, 2, member, 2) == CQV_E_OUT_OF_RANGE);
    CHECK(cqv_packing_member(p, 0, member, 1) == CQV_E_BUFFER_TOO_SMALL);
    cqv_packing_free(p);

    REQUIRE(cqv_greedy_packing(book.handle, 2, &p) == CQV_OK);
    CHECK(cqv_packing_size(p) == 1);
    CHECK(cqv_packing_optimal(p) == 0);
    cqv_packing_free(p);
    CHECK(cqv_max_clique_packing(book.handle, 0, nullptr, &p) == CQV_E_INVALID_ARGUMENT);

    cqv_bound b{};
    REQUIRE(cqv_check_clique_mantel(book.handle, 2, &b) == CQV_OK);
    CHECK(b.eligible == 1);
    CHECK(b.lhs == 3);
    CHECK(b.rhs.num == 49);
    CHECK(b.rhs.den == 8);
    CHECK(b.holds == 1);

    cqv_rational gap{};
    CHECK(cqv_tightness_gap(book.handle, 1, &gap) == CQV_E_INELIGIBLE);
    Graph k33;
    REQUIRE(cqv_graph_generate("turan:6,2", 0, &k33.handle) == CQV_OK);
    CHECK(cqv_tightness_gap(k33.handle, 1, &gap) == CQV_OK);
    CHECK(gap.num == 0);
    CHECK(gap.den == 1);

    cqv_proof_chain chain{};
    REQUIRE(cqv_verify_proof_chain(book.handle, 2, nullptr, &chain) == CQV_OK);
    CHECK(chain.a_size == 2);
    CHECK(chain.b_size == 5);
    CHECK(std::string(chain.steps[0].id) == "S1");
    CHECK(chain.steps[0].verdict == CQV_STEP_FAILS);
    CHECK(chain.steps[2].verdict == CQV_STEP_HOLDS);
    CHECK(chain.steps[2].lhs.num == 9);
    CHECK(chain.final_bound.holds == 1);
    CHECK(cqv_verify_proof_chain(book.handle, 1, nullptr, &chain) == CQV_E_INELIGIBLE);
}

TEST_CASE("report entry points")
{
    Graph book;
    REQUIRE(cqv_graph_generate("book:3", 0, &book.handle) == CQV_OK);
    const size_t orders[] = {2};
    cqv_analyze_options opts{orders, 1, 1, 0, cqv_default_budget()};
    char * report = nullptr;
    size_t findings = 0;
    REQUIRE(cqv_analyze(book.handle, &opts, CQV_FORMAT_JSON, &report, &findings) == CQV_OK);
    CHECK(findings == 1);
    auto text = take(report);
    CHECK(text.find("\"id\": \"S1\"") != std::string::npos);

    size_t total = 0, reproduced = 0;
    CHECK(cqv_report_recheck(text.c_str(), &total, &reproduced) == CQV_OK);
    CHECK(total == 1);
    CHECK(reproduced == 1);
    CHECK(cqv_report_recheck("not json", &total, &reproduced) == CQV_E_PARSE);

    cqv_verify_options vo{};
    vo.exhaustive = 1;
    vo.exhaustive_n = 4;
    REQUIRE(cqv_verify(&vo, CQV_FORMAT_CSV, &report, &findings) == CQV_OK);
    CHECK(findings == 0);
    CHECK(take(report).rfind("suite,checked,passed,failed\n", 0) == 0);
    vo.exhaustive_n = 9;
    CHECK(cqv_verify(&vo, CQV_FORMAT_JSON, &report, &findings) == CQV_E_LIMIT);

    const double grid[] = {0.3, 0.4};
    cqv_hunt_options ho{8, grid, 2, 50, 5, orders, 1, "bound", {}};
    REQUIRE(cqv_hunt(&ho, CQV_FORMAT_JSON, &report, &findings) == CQV_OK);
    auto first = take(report);
    REQUIRE(cqv_hunt(&ho, CQV_FORMAT_JSON, &report, &findings) == CQV_OK);
    CHECK(take(report) == first);
    ho.target = "step:S0";
    CHECK(cqv_hunt(&ho, CQV_FORMAT_JSON, &report, &findings) == CQV_E_INVALID_ARGUMENT);
}
