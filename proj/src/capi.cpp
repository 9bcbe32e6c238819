#include <cliqueval/cliqueval.h>

#include <cliqueval/generators.hpp>
#include <cliqueval/harness.hpp>

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

using namespace cliqueval;

struct cqv_graph {
    Graph graph;
};

struct cqv_packing {
    PackingSolution solution;
};

namespace
{
    thread_local std::string last_error;

    auto status_of(ErrorKind kind) -> cqv_status
    {
        switch (kind) {
            case ErrorKind::invalid_argument: return CQV_E_INVALID_ARGUMENT;
            case ErrorKind::parse: return CQV_E_PARSE;
            case ErrorKind::out_of_range: return CQV_E_OUT_OF_RANGE;
            case ErrorKind::ineligible: return CQV_E_INELIGIBLE;
            case ErrorKind::limit: return CQV_E_LIMIT;
            case ErrorKind::internal: return CQV_E_INTERNAL;
        }
        return CQV_E_INTERNAL;
    }

    auto fail(cqv_status status, std::string message) -> cqv_status
    {
        last_error = std::move(message);
        return status;
    }

    template <typename Fn>
    auto guarded(Fn && fn) -> cqv_status
    {
        try {
            return fn();
        }
        catch (const Error & e) {
            return fail(status_of(e.kind()), e.what());
        }
        catch (const std::bad_alloc &) {
            return fail(CQV_E_LIMIT, "out of memory");
        }
        catch (const std::exception & e) {
            return fail(CQV_E_INTERNAL, e.what());
        }
        catch (...) {
            return fail(CQV_E_INTERNAL, "unknown exception");
        }
    }

    auto require(const void * p, const char * what) -> void
    {
        if (! p)
            throw Error(ErrorKind::invalid_argument, std::string(what) + " must not be null");
    }

    auto copy_string(const std::string & s) -> char *
    {
        auto * out = static_cast<char *>(std::malloc(s.size() + 1));
        if (! out)
            throw std::bad_alloc();
        std::memcpy(out, s.c_str(), s.size() + 1);
        return out;
    }

    auto emit_graph(Graph g, cqv_graph ** out) -> cqv_status
    {
        *out = new cqv_graph{std::move(g)};
        return CQV_OK;
    }

    auto to_c(const Rational & r) -> cqv_rational { return {r.num(), r.den()}; }

    auto to_c(const BoundReport & b) -> cqv_bound
    {
        return {b.k, b.eligible ? 1 : 0, b.lhs, to_c(b.rhs), b.holds ? 1 : 0, to_c(b.slack)};
    }

    auto to_budget(const cqv_budget * b) -> SolverBudget
    {
        // zeroed fields fall back to the defaults
        SolverBudget budget;
        if (b && b->node_limit)
            budget.node_limit = b->node_limit;
        if (b && b->time_limit_seconds > 0)
            budget.time_limit_seconds = b->time_limit_seconds;
        return budget;
    }

    auto to_format(cqv_format f) -> OutputFormat
    {
        switch (f) {
            case CQV_FORMAT_JSON: return OutputFormat::json;
            case CQV_FORMAT_CSV: return OutputFormat::csv;
        }
        throw Error(ErrorKind::invalid_argument, "unknown output format");
    }

    auto deliver(const Report & report, cqv_format format, char ** out, size_t * finding_count) -> cqv_status
    {
        auto text = emit_report(report, to_format(format));
        *out = copy_string(text);
        if (finding_count)
            *finding_count = report.findings.size();
        return CQV_OK;
    }
}

extern "C" {

const char * cqv_version(void) { return "1.0.0"; }

const char * cqv_last_error(void) { return last_error.c_str(); }

const char * cqv_status_name(cqv_status status)
{
    switch (status) {
        case CQV_OK: return "ok";
        case CQV_E_INVALID_ARGUMENT: return "invalid argument";
        case CQV_E_PARSE: return "parse error";
        case CQV_E_OUT_OF_RANGE: return "out of range";
        case CQV_E_INELIGIBLE: return "ineligible input";
        case CQV_E_LIMIT: return "limit exceeded";
        case CQV_E_INTERNAL: return "internal error";
        case CQV_E_BUFFER_TOO_SMALL: return "buffer too small";
    }
    return "unknown status";
}

void cqv_string_free(char * s) { std::free(s); }

cqv_status cqv_graph_from_edges(size_t n, const uint32_t * endpoints, size_t edge_count, cqv_graph ** out)
{
    return guarded([&] {
        require(out, "out");
        if (edge_count)
            require(endpoints, "endpoints");
        std::vector<std::pair<Vertex, Vertex>> edges;
        edges.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i)
            edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        return emit_graph(Graph::from_edge_list(n, edges), out);
    });
}

cqv_status cqv_graph_from_edge_list_text(const char * text, int one_based, cqv_graph ** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        return emit_graph(parse_edge_list(text, one_based != 0), out);
    });
}

cqv_status cqv_graph_from_graph6(const char * text, cqv_graph ** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        std::string_view s(text);
        while (! s.empty() && (s.back() == '\n' || s.back() == '\r'))
            s.remove_suffix(1);
        return emit_graph(decode_graph6(s), out);
    });
}

cqv_status cqv_graph_generate(const char * spec, uint64_t seed, cqv_graph ** out)
{
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        return emit_graph(generate(spec, seed), out);
    });
}

void cqv_graph_free(cqv_graph * g) { delete g; }

size_t cqv_graph_vertex_count(const cqv_graph * g) { return g ? g->graph.vertex_count() : 0; }

uint64_t cqv_graph_edge_count(const cqv_graph * g) { return g ? g->graph.edge_count() : 0; }

cqv_status cqv_graph_neighborhood(const cqv_graph * g, uint32_t v, uint32_t * out, size_t capacity, size_t * count)
{
    return guarded([&] {
        require(g, "graph");
        require(count, "count");
        auto members = g->graph.neighborhood(v).members();
        *count = members.size();
        if (members.size() > capacity)
            return fail(CQV_E_BUFFER_TOO_SMALL, "neighbourhood has " + std::to_string(members.size()) + " vertices");
        if (! members.empty())
            require(out, "out");
        std::copy(members.begin(), members.end(), out);
        return CQV_OK;
    });
}

cqv_status cqv_graph_to_graph6(const cqv_graph * g, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = copy_string(encode_graph6(g->graph));
        return CQV_OK;
    });
}

cqv_status cqv_graph_to_edge_list_text(const cqv_graph * g, int one_based, char ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = copy_string(format_edge_list(g->graph, one_based != 0));
        return CQV_OK;
    });
}

cqv_status cqv_clique_census(const cqv_graph * g, uint64_t * counts, size_t capacity, size_t * length)
{
    return guarded([&] {
        require(g, "graph");
        require(length, "length");
        auto census = clique_census(g->graph);
        *length = census.counts.size();
        if (census.counts.size() > capacity)
            return fail(CQV_E_BUFFER_TOO_SMALL, "census has " + std::to_string(census.counts.size()) + " entries");
        if (! census.counts.empty())
            require(counts, "counts");
        std::copy(census.counts.begin(), census.counts.end(), counts);
        return CQV_OK;
    });
}

cqv_status cqv_clique_count(const cqv_graph * g, size_t k, uint64_t * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = enumerate_cliques(g->graph, k).size();
        return CQV_OK;
    });
}

cqv_status cqv_clique_value(const cqv_graph * g, const uint32_t * vertices, size_t k, uint64_t * out)
{
    return guarded([&] {
        require(g, "graph");
        require(vertices, "vertices");
        require(out, "out");
        auto q = Clique::in(g->graph, std::vector<Vertex>(vertices, vertices + k));
        *out = clique_value(g->graph, q);
        return CQV_OK;
    });
}

cqv_status cqv_verify_handshaking(const cqv_graph * g, size_t k, cqv_handshaking * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        auto r = verify_handshaking(g->graph, k);
        *out = {r.k, r.value_sum, r.rhs, r.equal ? 1 : 0};
        return CQV_OK;
    });
}

cqv_status cqv_subgraph_count(const cqv_graph * h, const cqv_graph * g, uint64_t * out)
{
    return guarded([&] {
        require(h, "pattern");
        require(g, "graph");
        require(out, "out");
        *out = subgraph_count(h->graph, g->graph);
        return CQV_OK;
    });
}

cqv_status cqv_verify_kelly(const cqv_graph * h, const cqv_graph * g, cqv_kelly * out)
{
    return guarded([&] {
        require(h, "pattern");
        require(g, "graph");
        require(out, "out");
        auto r = verify_kelly(h->graph, g->graph);
        *out = {r.lhs, r.rhs, r.equal ? 1 : 0};
        return CQV_OK;
    });
}

cqv_budget cqv_default_budget(void)
{
    SolverBudget b;
    return {b.node_limit, b.time_limit_seconds};
}

cqv_status cqv_max_clique_packing(const cqv_graph * g, size_t k, const cqv_budget * budget, cqv_packing ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = new cqv_packing{max_clique_packing(g->graph, k, to_budget(budget))};
        return CQV_OK;
    });
}

cqv_status cqv_greedy_packing(const cqv_graph * g, size_t k, cqv_packing ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = new cqv_packing{greedy_maximal_packing(g->graph, k)};
        return CQV_OK;
    });
}

size_t cqv_packing_size(const cqv_packing * p) { return p ? p->solution.size() : 0; }

size_t cqv_packing_order(const cqv_packing * p) { return p ? p->solution.k : 0; }

int cqv_packing_optimal(const cqv_packing * p) { return p && p->solution.optimal ? 1 : 0; }

cqv_status cqv_packing_member(const cqv_packing * p, size_t index, uint32_t * out, size_t capacity)
{
    return guarded([&] {
        require(p, "packing");
        require(out, "out");
        if (index >= p->solution.size())
            return fail(CQV_E_OUT_OF_RANGE, "packing member index out of range");
        const auto & vs = p->solution.members[index].vertices();
        if (vs.size() > capacity)
            return fail(CQV_E_BUFFER_TOO_SMALL, "member has " + std::to_string(vs.size()) + " vertices");
        std::copy(vs.begin(), vs.end(), out);
        return CQV_OK;
    });
}

void cqv_packing_free(cqv_packing * p) { delete p; }

cqv_status cqv_check_clique_mantel(const cqv_graph * g, size_t k, cqv_bound * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = to_c(check_clique_mantel(g->graph, k));
        return CQV_OK;
    });
}

cqv_status cqv_tightness_gap(const cqv_graph * g, size_t k, cqv_rational * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = to_c(tightness_gap(g->graph, k));
        return CQV_OK;
    });
}

cqv_status cqv_verify_proof_chain(const cqv_graph * g, size_t k, const cqv_budget * budget, cqv_proof_chain * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        auto r = verify_proof_chain(g->graph, k, to_budget(budget));
        cqv_proof_chain c{};
        c.k = r.k;
        c.a_size = r.a_size;
        c.b_size = r.b_size;
        c.tainted = r.tainted ? 1 : 0;
        for (size_t i = 0; i < r.steps.size() && i < 5; ++i) {
            const auto & s = r.steps[i];
            std::strncpy(c.steps[i].id, s.id.c_str(), sizeof c.steps[i].id - 1);
            c.steps[i].lhs = to_c(s.lhs);
            c.steps[i].rhs = to_c(s.rhs);
            c.steps[i].verdict = s.verdict == StepVerdict::holds ? CQV_STEP_HOLDS
                : s.verdict == StepVerdict::fails                ? CQV_STEP_FAILS
                                                                 : CQV_STEP_UNKNOWN;
        }
        c.final_bound = to_c(r.final_bound);
        *out = c;
        return CQV_OK;
    });
}

cqv_status cqv_analyze(const cqv_graph * g, const cqv_analyze_options * options, cqv_format format, char ** report,
        size_t * finding_count)
{
    return guarded([&] {
        require(g, "graph");
        require(report, "report");
        AnalyzeOptions opts;
        if (options) {
            if (options->order_count)
                require(options->orders, "orders");
            opts.orders.assign(options->orders, options->orders + options->order_count);
            for (auto k : opts.orders)
                if (k < 1)
                    throw Error(ErrorKind::invalid_argument, "orders must be >= 1");
            opts.chain = options->chain != 0;
            opts.one_based_labels = options->one_based != 0;
            opts.budget = to_budget(&options->budget);
        }
        return deliver(analyze(g->graph, opts), format, report, finding_count);
    });
}

cqv_status cqv_verify(const cqv_verify_options * options, cqv_format format, char ** report, size_t * finding_count)
{
    return guarded([&] {
        require(options, "options");
        require(report, "report");
        VerifyConfig config;
        if (options->exhaustive)
            config.exhaustive_n = options->exhaustive_n;
        config.random_count = options->random_count;
        config.seed = options->seed;
        if (options->random_max_n)
            config.random_max_n = options->random_max_n;
        config.handshaking = options->suites & CQV_SUITE_HANDSHAKING;
        config.kelly = options->suites & CQV_SUITE_KELLY;
        config.bounds = options->suites & CQV_SUITE_BOUNDS;
        config.oracle = options->suites & CQV_SUITE_ORACLE;
        config.chain = options->suites & CQV_SUITE_CHAIN;
        config.budget = to_budget(&options->budget);
        return deliver(verify(config), format, report, finding_count);
    });
}

cqv_status cqv_hunt(const cqv_hunt_options * options, cqv_format format, char ** report, size_t * finding_count)
{
    return guarded([&] {
        require(options, "options");
        require(report, "report");
        HuntConfig config;
        config.n = options->n;
        if (options->p_count) {
            require(options->p_grid, "p_grid");
            config.p_grid.assign(options->p_grid, options->p_grid + options->p_count);
        }
        config.samples = options->samples;
        config.seed = options->seed;
        if (options->order_count) {
            require(options->orders, "orders");
            config.orders.assign(options->orders, options->orders + options->order_count);
        }
        if (options->target)
            config.target = options->target;
        config.budget = to_budget(&options->budget);
        return deliver(hunt(config), format, report, finding_count);
    });
}

cqv_status cqv_report_recheck(const char * json, size_t * total, size_t * reproduced)
{
    return guarded([&] {
        require(json, "json");
        require(total, "total");
        require(reproduced, "reproduced");
        auto report = parse_report(json);
        *total = report.findings.size();
        *reproduced = 0;
        for (const auto & f : report.findings)
            if (reproduce_finding(f))
                ++*reproduced;
        return CQV_OK;
    });
}

}
