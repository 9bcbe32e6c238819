#include <cliqueval/mantel.hpp>

#include <algorithm>

using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace cliqueval {

auto to_string(StepVerdict v) -> string
{
    switch (v) {
        case StepVerdict::holds: return "holds";
        case StepVerdict::fails: return "fails";
        case StepVerdict::unknown: return "unknown";
    }
    return "unknown";
}

auto ProofChainReport::step(const string & id) const -> const ProofStep &
{
    for (const auto & s : steps)
        if (s.id == id)
            return s;
    throw Error(ErrorKind::invalid_argument, "no proof step named " + id);
}

namespace
{
    auto as_signed(uint64_t v) -> std::int64_t
    {
        if (v > static_cast<uint64_t>(INT64_MAX))
            throw Error(ErrorKind::limit, "count too large for exact rational arithmetic");
        return static_cast<std::int64_t>(v);
    }

    auto verdict(bool ok) -> StepVerdict { return ok ? StepVerdict::holds : StepVerdict::fails; }

    void require_order(size_t k)
    {
        if (k < 1)
            throw Error(ErrorKind::invalid_argument, "Mantel-type bounds require k >= 1");
    }
}

auto bound_from_census(const CliqueCensus & census, size_t k) -> BoundReport
{
    require_order(k);
    BoundReport report;
    report.k = k;
    report.eligible = census.count(k + 2) == 0;
    report.lhs = census.count(k + 1);
    auto ck = Rational(as_signed(census.count(k)));
    report.rhs = ck * ck / Rational(as_signed(4 * k));
    if (report.eligible) {
        report.slack = report.rhs - Rational(as_signed(report.lhs));
        report.holds = report.slack >= Rational(0);
    }
    return report;
}

auto check_clique_mantel(const Graph & g, size_t k) -> BoundReport
{
    return bound_from_census(clique_census(g), k);
}

auto tightness_gap(const Graph & g, size_t k) -> Rational
{
    auto report = check_clique_mantel(g, k);
    if (! report.eligible)
        throw Error(ErrorKind::ineligible, "graph contains a K_" + std::to_string(k + 2) + "; the bound does not apply");
    return report.slack;
}

auto verify_proof_chain(const Graph & g, size_t k, const SolverBudget & budget) -> ProofChainReport
{
    require_order(k);
    auto census = clique_census(g);
    if (census.count(k + 2) != 0)
        throw Error(ErrorKind::ineligible, "graph contains a K_" + std::to_string(k + 2) + "; the proof chain does not apply");

    ProofChainReport report;
    report.k = k;
    report.packing = max_clique_packing(g, k, budget);
    report.tainted = ! report.packing.optimal;
    report.final_bound = bound_from_census(census, k);

    auto cliques = enumerate_cliques(g, k);
    report.a_size = report.packing.size();
    report.b_size = cliques.size() - report.a_size;

    uint64_t sum_a = 0, sum_b = 0, max_value = 0;
    for (const auto & q : cliques) {
        auto value = clique_value(g, q);
        bool in_a = std::binary_search(report.packing.members.begin(), report.packing.members.end(), q);
        (in_a ? sum_a : sum_b) += value;
        if (report.max_value_clique.empty() || value > max_value) {
            report.max_value_clique = q.vertices();
            max_value = value;
        }
    }

    auto next = census.count(k + 1);
    auto a = Rational(as_signed(report.a_size)), b = Rational(as_signed(report.b_size));
    auto c_next = Rational(as_signed(next));
    auto kk = Rational(as_signed(k));

    ProofStep s1{"S1", Rational(as_signed(max_value)), a, verdict(max_value <= report.a_size)};
    if (report.tainted)
        s1.verdict = StepVerdict::unknown;
    ProofStep s2{"S2", Rational(as_signed(sum_a)), c_next, verdict(sum_a <= next)};
    ProofStep s3{"S3", Rational(as_signed(sum_a + sum_b)), Rational(as_signed((k + 1) * next)),
        verdict(sum_a + sum_b == (k + 1) * next)};
    ProofStep s4{"S4", kk * c_next, Rational(as_signed(sum_b)), verdict(k * next <= sum_b)};
    auto product = a * b / kk;
    ProofStep s5{"S5", c_next, product, verdict(c_next <= product && product <= report.final_bound.rhs)};
    report.steps = {s1, s2, s3, s4, s5};

    if (s3.verdict != StepVerdict::holds)
        throw Error(ErrorKind::internal, "clique handshaking identity failed inside the proof chain");
    // S4 follows from S2 and S3, S5 from S1 and S4
    if (s1.verdict == StepVerdict::holds && s2.verdict == StepVerdict::holds
            && (s4.verdict != StepVerdict::holds || s5.verdict != StepVerdict::holds))
        throw Error(ErrorKind::internal, "proof chain arithmetic is inconsistent: S1-S3 hold but S4 or S5 fails");

    return report;
}

}
