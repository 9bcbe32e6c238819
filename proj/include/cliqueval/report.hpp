#pragma once

#include <cliqueval/clique.hpp>
#include <cliqueval/mantel.hpp>
#include <cliqueval/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cliqueval {

enum class FindingKind { bound_violation, step_violation, identity_violation };

auto to_string(FindingKind kind) -> std::string;

/// A failed check together with a graph6 witness that reproduces it.
struct Finding {
    FindingKind kind = FindingKind::identity_violation;
    std::string graph6;
    std::size_t k = 0;
    /// Proof step ("S1".."S5") or the name of the failed identity check.
    std::optional<std::string> step;
    Rational lhs;
    Rational rhs;

    friend auto operator<=>(const Finding &, const Finding &) = default;
};

struct CliqueValueEntry {
    std::vector<Vertex> vertices;
    std::uint64_t value = 0;

    friend auto operator==(const CliqueValueEntry &, const CliqueValueEntry &) -> bool = default;
};

struct ValueSection {
    std::size_t k = 0;
    std::vector<CliqueValueEntry> cliques;

    friend auto operator==(const ValueSection &, const ValueSection &) -> bool = default;
};

struct ChainSection {
    std::size_t k = 0;
    std::uint64_t a_size = 0;
    std::uint64_t b_size = 0;
    bool optimal = true;
    std::vector<std::vector<Vertex>> a_members;
    std::vector<ProofStep> steps;

    friend auto operator==(const ChainSection &, const ChainSection &) -> bool = default;
};

struct SuiteSummary {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;

    friend auto operator==(const SuiteSummary &, const SuiteSummary &) -> bool = default;
};

enum class ReportKind { analyze, verify, hunt };

/// Output document of the analyze, verify and hunt commands.
struct Report {
    ReportKind kind = ReportKind::analyze;

    // analyze
    std::string graph6;
    unsigned label_base = 0;
    std::vector<std::uint64_t> census;
    std::vector<ValueSection> values;
    std::vector<HandshakingReport> handshaking;
    std::vector<BoundReport> bounds;
    std::optional<ChainSection> chain;

    // verify
    std::string mode;
    std::uint64_t graphs_examined = 0;
    std::vector<SuiteSummary> suites;

    // hunt
    std::uint64_t samples = 0;
    std::uint64_t eligible = 0;

    std::vector<Finding> findings;

    friend auto operator==(const Report &, const Report &) -> bool = default;
};

enum class OutputFormat { json, csv };

/// Serializes with a fixed key order; rationals as numerator/denominator pairs.
auto emit_report(const Report & report, OutputFormat format) -> std::string;

/// Inverse of emit_report for the JSON format.
auto parse_report(std::string_view json) -> Report;

}
