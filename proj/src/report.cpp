#include <cliqueval/report.hpp>

#include <json.hpp>

#include <sstream>

using nlohmann::ordered_json;
using std::size_t;
using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace cliqueval {

auto to_string(FindingKind kind) -> string
{
    switch (kind) {
        case FindingKind::bound_violation: return "bound_violation";
        case FindingKind::step_violation: return "step_violation";
        case FindingKind::identity_violation: return "identity_violation";
    }
    return "identity_violation";
}

namespace
{
    auto finding_kind(const string & s) -> FindingKind
    {
        if (s == "bound_violation")
            return FindingKind::bound_violation;
        if (s == "step_violation")
            return FindingKind::step_violation;
        if (s == "identity_violation")
            return FindingKind::identity_violation;
        throw Error(ErrorKind::parse, "report: unknown finding kind '" + s + "'");
    }

    auto report_kind_name(ReportKind kind) -> string
    {
        switch (kind) {
            case ReportKind::analyze: return "analyze";
            case ReportKind::verify: return "verify";
            case ReportKind::hunt: return "hunt";
        }
        return "analyze";
    }

    auto report_kind(const string & s) -> ReportKind
    {
        if (s == "analyze")
            return ReportKind::analyze;
        if (s == "verify")
            return ReportKind::verify;
        if (s == "hunt")
            return ReportKind::hunt;
        throw Error(ErrorKind::parse, "report: unknown command '" + s + "'");
    }

    auto verdict_from(const string & s) -> StepVerdict
    {
        if (s == "holds")
            return StepVerdict::holds;
        if (s == "fails")
            return StepVerdict::fails;
        if (s == "unknown")
            return StepVerdict::unknown;
        throw Error(ErrorKind::parse, "report: unknown step verdict '" + s + "'");
    }

    auto shifted(const vector<Vertex> & vs, unsigned base) -> vector<Vertex>
    {
        auto out = vs;
        for (auto & v : out)
            v += base;
        return out;
    }

    auto unshifted(const vector<Vertex> & vs, unsigned base) -> vector<Vertex>
    {
        auto out = vs;
        for (auto & v : out) {
            if (v < base)
                throw Error(ErrorKind::parse, "report: vertex label below label_base");
            v -= base;
        }
        return out;
    }

    auto finding_json(const Finding & f) -> ordered_json
    {
        ordered_json j;
        j["kind"] = to_string(f.kind);
        j["graph6"] = f.graph6;
        j["k"] = f.k;
        j["step"] = f.step ? ordered_json(*f.step) : ordered_json(nullptr);
        j["lhs_num"] = f.lhs.num();
        j["lhs_den"] = f.lhs.den();
        j["rhs_num"] = f.rhs.num();
        j["rhs_den"] = f.rhs.den();
        return j;
    }

    auto bound_json(const BoundReport & b) -> ordered_json
    {
        ordered_json j;
        j["k"] = b.k;
        j["eligible"] = b.eligible;
        j["lhs"] = b.lhs;
        j["rhs_num"] = b.rhs.num();
        j["rhs_den"] = b.rhs.den();
        if (b.eligible) {
            j["holds"] = b.holds;
            j["slack_num"] = b.slack.num();
            j["slack_den"] = b.slack.den();
        }
        else {
            j["holds"] = nullptr;
            j["slack_num"] = nullptr;
            j["slack_den"] = nullptr;
        }
        return j;
    }

    auto to_json(const Report & r) -> ordered_json
    {
        ordered_json j;
        j["command"] = report_kind_name(r.kind);
        switch (r.kind) {
            case ReportKind::analyze: {
                j["graph6"] = r.graph6;
                j["label_base"] = r.label_base;
                j["census"] = r.census;
                auto values = ordered_json::array();
                for (const auto & section : r.values) {
                    auto cliques = ordered_json::array();
                    for (const auto & entry : section.cliques)
                        cliques.push_back(ordered_json{{"vertices", shifted(entry.vertices, r.label_base)}, {"val", entry.value}});
                    values.push_back(ordered_json{{"k", section.k}, {"cliques", cliques}});
                }
                j["values"] = values;
                auto hs = ordered_json::array();
                for (const auto & h : r.handshaking)
                    hs.push_back(ordered_json{{"k", h.k}, {"sum", h.value_sum}, {"rhs", h.rhs}, {"equal", h.equal}});
                j["handshaking"] = hs;
                auto bounds = ordered_json::array();
                for (const auto & b : r.bounds)
                    bounds.push_back(bound_json(b));
                j["bounds"] = bounds;
                if (r.chain) {
                    const auto & c = *r.chain;
                    ordered_json chain;
                    chain["k"] = c.k;
                    chain["A_size"] = c.a_size;
                    chain["B_size"] = c.b_size;
                    chain["optimal"] = c.optimal;
                    auto members = ordered_json::array();
                    for (const auto & m : c.a_members)
                        members.push_back(shifted(m, r.label_base));
                    chain["A"] = members;
                    auto steps = ordered_json::array();
                    for (const auto & s : c.steps) {
                        ordered_json step;
                        step["id"] = s.id;
                        step["holds"] = s.verdict == StepVerdict::unknown ? ordered_json(nullptr)
                                                                          : ordered_json(s.verdict == StepVerdict::holds);
                        step["verdict"] = to_string(s.verdict);
                        step["lhs_num"] = s.lhs.num();
                        step["lhs_den"] = s.lhs.den();
                        step["rhs_num"] = s.rhs.num();
                        step["rhs_den"] = s.rhs.den();
                        steps.push_back(step);
                    }
                    chain["steps"] = steps;
                    j["chain"] = chain;
                }
                else
                    j["chain"] = nullptr;
                break;
            }
            case ReportKind::verify: {
                j["mode"] = r.mode;
                j["graphs_examined"] = r.graphs_examined;
                auto suites = ordered_json::array();
                for (const auto & s : r.suites)
                    suites.push_back(ordered_json{{"name", s.name}, {"checked", s.checked}, {"passed", s.passed}, {"failed", s.failed}});
                j["suites"] = suites;
                break;
            }
            case ReportKind::hunt:
                j["samples"] = r.samples;
                j["eligible"] = r.eligible;
                break;
        }
        auto findings = ordered_json::array();
        for (const auto & f : r.findings)
            findings.push_back(finding_json(f));
        j["findings"] = findings;
        return j;
    }

    auto rational_at(const ordered_json & j, const char * num, const char * den) -> Rational
    {
        return Rational(j.at(num).get<std::int64_t>(), j.at(den).get<std::int64_t>());
    }

    auto csv_bool(bool b) -> const char * { return b ? "true" : "false"; }
}

auto emit_report(const Report & report, OutputFormat format) -> string
{
    if (format == OutputFormat::json)
        return to_json(report).dump(2) + "\n";

    std::ostringstream out;
    switch (report.kind) {
        case ReportKind::analyze:
            out << "k,eligible,lhs,rhs_num,rhs_den,holds,slack_num,slack_den\n";
            for (const auto & b : report.bounds) {
                out << b.k << ',' << csv_bool(b.eligible) << ',' << b.lhs << ',' << b.rhs.num() << ',' << b.rhs.den() << ',';
                if (b.eligible)
                    out << csv_bool(b.holds) << ',' << b.slack.num() << ',' << b.slack.den() << '\n';
                else
                    out << ",,\n";
            }
            break;
        case ReportKind::verify:
            out << "suite,checked,passed,failed\n";
            for (const auto & s : report.suites)
                out << s.name << ',' << s.checked << ',' << s.passed << ',' << s.failed << '\n';
            break;
        case ReportKind::hunt:
            out << "kind,graph6,k,step,lhs_num,lhs_den,rhs_num,rhs_den\n";
            for (const auto & f : report.findings)
                out << to_string(f.kind) << ',' << f.graph6 << ',' << f.k << ',' << f.step.value_or("") << ','
                    << f.lhs.num() << ',' << f.lhs.den() << ',' << f.rhs.num() << ',' << f.rhs.den() << '\n';
            break;
    }
    return out.str();
}

auto parse_report(string_view text) -> Report
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    }
    catch (const nlohmann::json::exception & e) {
        throw Error(ErrorKind::parse, string("report: ") + e.what());
    }

    try {
        Report r;
        r.kind = report_kind(j.at("command").get<string>());
        switch (r.kind) {
            case ReportKind::analyze: {
                r.graph6 = j.at("graph6").get<string>();
                r.label_base = j.at("label_base").get<unsigned>();
                r.census = j.at("census").get<vector<uint64_t>>();
                for (const auto & section : j.at("values")) {
                    ValueSection vs;
                    vs.k = section.at("k").get<size_t>();
                    for (const auto & entry : section.at("cliques"))
                        vs.cliques.push_back({unshifted(entry.at("vertices").get<vector<Vertex>>(), r.label_base),
                            entry.at("val").get<uint64_t>()});
                    r.values.push_back(std::move(vs));
                }
                for (const auto & h : j.at("handshaking"))
                    r.handshaking.push_back({h.at("k").get<size_t>(), h.at("sum").get<uint64_t>(), h.at("rhs").get<uint64_t>(),
                        h.at("equal").get<bool>()});
                for (const auto & b : j.at("bounds")) {
                    BoundReport br;
                    br.k = b.at("k").get<size_t>();
                    br.eligible = b.at("eligible").get<bool>();
                    br.lhs = b.at("lhs").get<uint64_t>();
                    br.rhs = rational_at(b, "rhs_num", "rhs_den");
                    if (br.eligible) {
                        br.holds = b.at("holds").get<bool>();
                        br.slack = rational_at(b, "slack_num", "slack_den");
                    }
                    r.bounds.push_back(br);
                }
                const auto & chain = j.at("chain");
                if (! chain.is_null()) {
                    ChainSection c;
                    c.k = chain.at("k").get<size_t>();
                    c.a_size = chain.at("A_size").get<uint64_t>();
                    c.b_size = chain.at("B_size").get<uint64_t>();
                    c.optimal = chain.at("optimal").get<bool>();
                    for (const auto & m : chain.at("A"))
                        c.a_members.push_back(unshifted(m.get<vector<Vertex>>(), r.label_base));
                    for (const auto & s : chain.at("steps"))
                        c.steps.push_back({s.at("id").get<string>(), rational_at(s, "lhs_num", "lhs_den"),
                            rational_at(s, "rhs_num", "rhs_den"), verdict_from(s.at("verdict").get<string>())});
                    r.chain = std::move(c);
                }
                break;
            }
            case ReportKind::verify:
                r.mode = j.at("mode").get<string>();
                r.graphs_examined = j.at("graphs_examined").get<uint64_t>();
                for (const auto & s : j.at("suites"))
                    r.suites.push_back({s.at("name").get<string>(), s.at("checked").get<uint64_t>(), s.at("passed").get<uint64_t>(),
                        s.at("failed").get<uint64_t>()});
                break;
            case ReportKind::hunt:
                r.samples = j.at("samples").get<uint64_t>();
                r.eligible = j.at("eligible").get<uint64_t>();
                break;
        }
        for (const auto & f : j.at("findings")) {
            Finding finding;
            finding.kind = finding_kind(f.at("kind").get<string>());
            finding.graph6 = f.at("graph6").get<string>();
            finding.k = f.at("k").get<size_t>();
            if (! f.at("step").is_null())
                finding.step = f.at("step").get<string>();
            finding.lhs = rational_at(f, "lhs_num", "lhs_den");
            finding.rhs = rational_at(f, "rhs_num", "rhs_den");
            r.findings.push_back(std::move(finding));
        }
        return r;
    }
    catch (const nlohmann::json::exception & e) {
        throw Error(ErrorKind::parse, string("report: ") + e.what());
    }
}

}
