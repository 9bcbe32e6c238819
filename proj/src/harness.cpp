#include <cliqueval/harness.hpp>
#include <cliqueval/generators.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <utility>

using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace cliqueval {

namespace
{
    auto sorted_unique(vector<Finding> findings) -> vector<Finding>
    {
        std::sort(findings.begin(), findings.end());
        findings.erase(std::unique(findings.begin(), findings.end()), findings.end());
        return findings;
    }

    auto count_rational(uint64_t v) -> Rational
    {
        if (v > static_cast<uint64_t>(INT64_MAX))
            throw Error(ErrorKind::limit, "count too large for report");
        return Rational(static_cast<std::int64_t>(v));
    }

    auto step_finding(const string & witness, size_t k, const ProofStep & step) -> Finding
    {
        return Finding{FindingKind::step_violation, witness, k, step.id, step.lhs, step.rhs};
    }

    auto bound_finding(const string & witness, const BoundReport & b) -> Finding
    {
        return Finding{FindingKind::bound_violation, witness, b.k, std::nullopt, count_rational(b.lhs), b.rhs};
    }

    auto kelly_patterns() -> const vector<pair<string, Graph>> &
    {
        static const vector<pair<string, Graph>> patterns{
            {"K2", complete_graph(2)},
            {"P3", Graph::from_edge_list(3, {{0, 1}, {1, 2}})},
            {"K3", complete_graph(3)},
            {"C4", cycle_graph(4)},
        };
        return patterns;
    }

    auto kelly_pattern(const string & name) -> const Graph &
    {
        for (const auto & [pattern_name, pattern] : kelly_patterns())
            if (pattern_name == name)
                return pattern;
        throw Error(ErrorKind::invalid_argument, "unknown Kelly pattern " + name);
    }

    // Result of one named identity-style check.
    struct CheckResult {
        Rational lhs;
        Rational rhs;
        bool ok = true;
    };

    auto triangle_free_directly(const Graph & g) -> bool
    {
        auto n = g.vertex_count();
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex c = b + 1; c < n; ++c)
                    if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c))
                        return false;
        return true;
    }

    // triangle count and whether a K4 exists, by nested loops
    auto triangles_directly(const Graph & g) -> pair<uint64_t, bool>
    {
        auto n = g.vertex_count();
        uint64_t t = 0;
        bool k4 = false;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) {
                if (! g.adjacent(a, b))
                    continue;
                for (Vertex c = b + 1; c < n; ++c) {
                    if (! g.adjacent(a, c) || ! g.adjacent(b, c))
                        continue;
                    ++t;
                    for (Vertex d = c + 1; d < n; ++d)
                        if (g.adjacent(a, d) && g.adjacent(b, d) && g.adjacent(c, d))
                            k4 = true;
                }
            }
        return {t, k4};
    }

    auto flag(bool b) -> Rational { return Rational(b ? 1 : 0); }

    /// Named checks shared by the verify suites and finding reproduction.
    auto run_check(const string & name, const Graph & g, size_t k, const SolverBudget & budget) -> CheckResult
    {
        if (name == "handshaking") {
            auto h = verify_handshaking(g, k);
            return {count_rational(h.value_sum), count_rational(h.rhs), h.equal};
        }
        if (name == "census") {
            auto listed = enumerate_cliques(g, k).size();
            auto counted = clique_census(g).count(k);
            return {count_rational(listed), count_rational(counted), listed == counted};
        }
        if (name.starts_with("kelly:")) {
            auto r = verify_kelly(kelly_pattern(name.substr(6)), g);
            return {count_rational(r.lhs), count_rational(r.rhs), r.equal};
        }
        if (name == "specialization") {
            auto b = check_clique_mantel(g, k);
            auto n = g.vertex_count();
            auto m = g.edge_count();
            bool eligible = false, holds = false;
            if (k == 1) {
                eligible = triangle_free_directly(g);
                holds = 4 * m <= n * n;
            }
            else if (k == 2) {
                auto [t, has_k4] = triangles_directly(g);
                eligible = ! has_k4;
                holds = 8 * t <= m * m;
            }
            else
                return {flag(b.eligible && b.holds), flag(b.eligible && b.holds), true};
            bool direct = eligible && holds;
            bool via_census = b.eligible && b.holds;
            return {flag(via_census), flag(direct), direct == via_census && eligible == b.eligible};
        }
        if (name == "exactness") {
            auto census = clique_census(g);
            auto first = bound_from_census(census, k);
            auto second = bound_from_census(census, k);
            return {first.slack, second.slack, first == second};
        }
        if (name == "oracle") {
            auto exact = max_clique_packing(g, k, budget);
            auto reference = exhaustive_packing_size(g, k);
            bool ok = exact.optimal && exact.size() == reference && is_vertex_disjoint(exact.members)
                && is_independent_family(g, k, exact.members);
            return {count_rational(exact.size()), count_rational(reference), ok};
        }
        if (name == "greedy") {
            auto exact = max_clique_packing(g, k, budget);
            auto greedy = greedy_maximal_packing(g, k);
            bool maximal = true;
            for (const auto & q : enumerate_cliques(g, k)) {
                bool blocked = std::any_of(greedy.members.begin(), greedy.members.end(),
                    [&](const Clique & m) { return m == q || cliques_conflict(g, m, q); });
                if (! blocked)
                    maximal = false;
            }
            bool ok = greedy.size() <= exact.size() && maximal && ! greedy.optimal && is_vertex_disjoint(greedy.members);
            return {count_rational(greedy.size()), count_rational(exact.size()), ok};
        }
        if (name == "chain") {
            try {
                auto chain = verify_proof_chain(g, k, budget);
                return {Rational(0), Rational(0), true};
            }
            catch (const Error & e) {
                if (e.kind() != ErrorKind::internal)
                    throw;
                return {Rational(1), Rational(0), false};
            }
        }
        throw Error(ErrorKind::invalid_argument, "unknown check " + name);
    }

    class SuiteLedger {
    public:
        explicit SuiteLedger(SolverBudget budget) : _budget(budget) {}

        void run(const string & suite, const string & check, const Graph & g, size_t k, const string & witness)
        {
            auto & s = summary(suite);
            ++s.checked;
            auto result = run_check(check, g, k, _budget);
            if (result.ok) {
                ++s.passed;
                return;
            }
            ++s.failed;
            _findings.push_back({FindingKind::identity_violation, witness, k, check, result.lhs, result.rhs});
        }

        void bound(const Graph & g, size_t k, const string & witness)
        {
            auto b = check_clique_mantel(g, k);
            if (! b.eligible)
                return;
            auto & s = summary("bounds");
            ++s.checked;
            if (b.holds)
                ++s.passed;
            else {
                ++s.failed;
                _findings.push_back(bound_finding(witness, b));
            }
        }

        auto summary(const string & suite) -> SuiteSummary &
        {
            for (auto & s : _suites)
                if (s.name == suite)
                    return s;
            _suites.push_back({suite, 0, 0, 0});
            return _suites.back();
        }

        auto suites() -> vector<SuiteSummary> & { return _suites; }
        auto findings() -> vector<Finding> & { return _findings; }

    private:
        SolverBudget _budget;
        vector<SuiteSummary> _suites;
        vector<Finding> _findings;
    };

    constexpr size_t max_verify_order = 5;
    constexpr size_t max_mantel_order = 3;

    struct SuiteSelection {
        bool handshaking, kelly, bounds, oracle, chain;
    };

    auto selection(const VerifyConfig & c) -> SuiteSelection
    {
        if (! (c.handshaking || c.kelly || c.bounds || c.oracle || c.chain))
            return {true, true, true, true, true};
        return {c.handshaking, c.kelly, c.bounds, c.oracle, c.chain};
    }

    void check_graph(SuiteLedger & ledger, const SuiteSelection & sel, const Graph & g, const vector<string> & kelly_names)
    {
        auto witness = encode_graph6(g);
        if (sel.handshaking)
            for (size_t k = 1; k <= max_verify_order; ++k) {
                ledger.run("handshaking", "handshaking", g, k, witness);
                ledger.run("census", "census", g, k, witness);
            }
        if (sel.kelly && g.vertex_count() > 0 && ! g.has_isolated_vertex())
            for (const auto & name : kelly_names)
                if (kelly_pattern(name).vertex_count() <= g.vertex_count())
                    ledger.run("kelly", "kelly:" + name, g, kelly_pattern(name).vertex_count(), witness);
        if (sel.bounds)
            for (size_t k = 1; k <= max_mantel_order; ++k) {
                ledger.bound(g, k, witness);
                ledger.run("specialization", "specialization", g, k, witness);
                ledger.run("exactness", "exactness", g, k, witness);
            }
        if (sel.oracle)
            for (size_t k = 1; k <= max_mantel_order; ++k) {
                ledger.run("oracle", "oracle", g, k, witness);
                ledger.run("greedy", "greedy", g, k, witness);
            }
        if (sel.chain)
            for (size_t k = 1; k <= max_mantel_order; ++k)
                if (clique_census(g).count(k + 2) == 0)
                    ledger.run("chain", "chain", g, k, witness);
    }

    auto below(std::mt19937_64 & rng, uint64_t bound) -> uint64_t { return rng() % bound; }

    auto unit(std::mt19937_64 & rng) -> double { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

    auto order_label(const string & target) -> optional<string>
    {
        if (target.starts_with("step:"))
            return target.substr(5);
        return std::nullopt;
    }

    struct IndependentSearch {
        const Graph & g;
        const vector<Clique> & cliques;
        vector<size_t> chosen;
        size_t best = 0;

        void extend(size_t from)
        {
            best = std::max(best, chosen.size());
            for (size_t i = from; i < cliques.size(); ++i) {
                bool free = std::none_of(chosen.begin(), chosen.end(),
                    [&](size_t c) { return cliques_conflict(g, cliques[c], cliques[i]); });
                if (! free)
                    continue;
                chosen.push_back(i);
                extend(i + 1);
                chosen.pop_back();
            }
        }
    };
}

auto exhaustive_packing_size(const Graph & g, size_t k) -> size_t
{
    if (k < 1)
        throw Error(ErrorKind::invalid_argument, "packing requires k >= 1");
    auto cliques = enumerate_cliques(g, k);
    IndependentSearch search{g, cliques, {}, 0};
    search.extend(0);
    return search.best;
}

auto analyze(const Graph & g, const AnalyzeOptions & options) -> Report
{
    Report report;
    report.kind = ReportKind::analyze;
    report.graph6 = encode_graph6(g);
    report.label_base = options.one_based_labels ? 1 : 0;

    auto census = clique_census(g);
    report.census = census.counts;
    auto omega = census.clique_number();

    for (size_t k = 1; k <= omega; ++k) {
        ValueSection section{k, {}};
        for (const auto & q : enumerate_cliques(g, k))
            section.cliques.push_back({q.vertices(), clique_value(g, q)});
        report.values.push_back(std::move(section));
    }

    for (size_t k = 1; k + 1 <= omega; ++k) {
        auto h = verify_handshaking(g, k);
        if (! h.equal)
            report.findings.push_back({FindingKind::identity_violation, report.graph6, k, string("handshaking"),
                count_rational(h.value_sum), count_rational(h.rhs)});
        report.handshaking.push_back(h);
    }

    auto orders = options.orders;
    if (orders.empty())
        for (size_t k = 1; k <= std::max<size_t>(1, omega > 0 ? omega - 1 : 0); ++k)
            orders.push_back(k);
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());

    for (auto k : orders) {
        auto b = bound_from_census(census, k);
        if (b.eligible && ! b.holds)
            report.findings.push_back(bound_finding(report.graph6, b));
        report.bounds.push_back(b);
    }

    if (options.chain && census.count(orders.back() + 2) == 0) {
        auto k = orders.back();
        auto chain = verify_proof_chain(g, k, options.budget);
        ChainSection section;
        section.k = k;
        section.a_size = chain.a_size;
        section.b_size = chain.b_size;
        section.optimal = chain.packing.optimal;
        for (const auto & q : chain.packing.members)
            section.a_members.push_back(q.vertices());
        section.steps = chain.steps;
        for (const auto & s : chain.steps)
            if (s.verdict == StepVerdict::fails)
                report.findings.push_back(step_finding(report.graph6, k, s));
        report.chain = std::move(section);
    }

    report.findings = sorted_unique(std::move(report.findings));
    return report;
}

auto verify(const VerifyConfig & config) -> Report
{
    Report report;
    report.kind = ReportKind::verify;
    auto sel = selection(config);
    SuiteLedger ledger(config.budget);
    for (auto name : {"handshaking", "census", "kelly", "bounds", "specialization", "exactness", "oracle", "greedy", "chain"}) {
        string n = name;
        bool on = (n == "handshaking" || n == "census") ? sel.handshaking
            : n == "kelly"                            ? sel.kelly
            : (n == "bounds" || n == "specialization" || n == "exactness") ? sel.bounds
            : (n == "oracle" || n == "greedy")         ? sel.oracle
                                                       : sel.chain;
        if (on)
            ledger.summary(n);
    }

    vector<string> all_patterns;
    for (const auto & [name, pattern] : kelly_patterns())
        all_patterns.push_back(name);

    if (config.exhaustive_n) {
        if (config.random_count)
            throw Error(ErrorKind::invalid_argument, "verify takes either an exhaustive size or a random count, not both");
        LabeledGraphStream stream(*config.exhaustive_n);
        report.mode = "exhaustive:" + std::to_string(stream.vertex_count());
        stream.for_each([&](uint64_t, const Graph & g) {
            check_graph(ledger, sel, g, all_patterns);
            ++report.graphs_examined;
        });
    }
    else if (config.random_count) {
        if (config.random_max_n < 2 || config.random_max_n > 16)
            throw Error(ErrorKind::invalid_argument, "random instances need 2 <= max n <= 16");
        report.mode = "random:" + std::to_string(config.random_count) + ":seed=" + std::to_string(config.seed);
        std::mt19937_64 rng(config.seed);
        for (uint64_t i = 0; i < config.random_count; ++i) {
            const auto & [pattern_name, pattern] = kelly_patterns()[below(rng, kelly_patterns().size())];
            auto min_n = std::max<size_t>(2, sel.kelly ? pattern.vertex_count() : 2);
            auto n = min_n + below(rng, config.random_max_n - min_n + 1);
            auto p = 0.2 + 0.6 * unit(rng);
            Graph g;
            do
                g = gnp_graph(n, p, rng());
            while (sel.kelly && g.has_isolated_vertex());
            check_graph(ledger, sel, g, {pattern_name});
            ++report.graphs_examined;
        }
    }
    else
        throw Error(ErrorKind::invalid_argument, "verify needs an exhaustive size or a random count");

    report.suites = std::move(ledger.suites());
    report.findings = sorted_unique(std::move(ledger.findings()));
    return report;
}

auto hunt(const HuntConfig & config) -> Report
{
    auto step_target = order_label(config.target);
    bool want_bound = config.target == "bound" || config.target == "all";
    bool want_steps = config.target == "steps" || config.target == "all" || step_target.has_value();
    if (! want_bound && ! want_steps)
        throw Error(ErrorKind::invalid_argument, "hunt target must be bound, steps, all or step:S1..S5, got '" + config.target + "'");
    if (step_target && (step_target->size() != 2 || (*step_target)[0] != 'S' || (*step_target)[1] < '1' || (*step_target)[1] > '5'))
        throw Error(ErrorKind::invalid_argument, "unknown proof step '" + *step_target + "'");
    if (config.p_grid.empty())
        throw Error(ErrorKind::invalid_argument, "hunt needs at least one edge probability");
    for (auto p : config.p_grid)
        if (! (p >= 0.0 && p <= 1.0))
            throw Error(ErrorKind::invalid_argument, "edge probabilities must lie in [0,1]");
    if (config.orders.empty())
        throw Error(ErrorKind::invalid_argument, "hunt needs at least one order k");
    for (auto k : config.orders)
        if (k < 1)
            throw Error(ErrorKind::invalid_argument, "hunt orders must be >= 1");
    if (config.n > 62)
        throw Error(ErrorKind::invalid_argument, "hunt graphs are limited to 62 vertices (graph6 witnesses)");

    Report report;
    report.kind = ReportKind::hunt;
    report.samples = config.samples;
    std::mt19937_64 rng(config.seed);
    for (uint64_t i = 0; i < config.samples; ++i) {
        auto p = config.p_grid[i % config.p_grid.size()];
        auto g = gnp_graph(config.n, p, rng());
        auto census = clique_census(g);
        optional<string> witness;
        for (auto k : config.orders) {
            auto b = bound_from_census(census, k);
            if (! b.eligible)
                continue;
            ++report.eligible;
            if (! witness)
                witness = encode_graph6(g);
            if (want_bound && ! b.holds)
                report.findings.push_back(bound_finding(*witness, b));
            if (want_steps) {
                auto chain = verify_proof_chain(g, k, config.budget);
                for (const auto & s : chain.steps)
                    if (s.verdict == StepVerdict::fails && (! step_target || *step_target == s.id))
                        report.findings.push_back(step_finding(*witness, k, s));
            }
        }
    }
    report.findings = sorted_unique(std::move(report.findings));
    return report;
}

auto reproduce_finding(const Finding & finding) -> bool
{
    auto g = decode_graph6(finding.graph6);
    switch (finding.kind) {
        case FindingKind::bound_violation: {
            auto b = check_clique_mantel(g, finding.k);
            return b.eligible && ! b.holds && count_rational(b.lhs) == finding.lhs && b.rhs == finding.rhs;
        }
        case FindingKind::step_violation: {
            if (! finding.step || clique_census(g).count(finding.k + 2) != 0)
                return false;
            auto chain = verify_proof_chain(g, finding.k);
            const auto & s = chain.step(*finding.step);
            return s.verdict == StepVerdict::fails && s.lhs == finding.lhs && s.rhs == finding.rhs;
        }
        case FindingKind::identity_violation: {
            if (! finding.step)
                return false;
            auto result = run_check(*finding.step, g, finding.k, SolverBudget{});
            return ! result.ok && result.lhs == finding.lhs && result.rhs == finding.rhs;
        }
    }
    return false;
}

}
