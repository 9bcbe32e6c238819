#pragma once

#include <cliqueval/clique.hpp>
#include <cliqueval/packing.hpp>
#include <cliqueval/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cliqueval {

/// c_{k+1}(G) <= c_k(G)^2 / (4k) for K_{k+2}-free G.
/// k = 1 is m <= n^2/4, k = 2 is t <= m^2/8.
struct BoundReport {
    std::size_t k = 0;
    bool eligible = false;
    std::uint64_t lhs = 0;
    Rational rhs;
    bool holds = false;
    Rational slack;

    friend auto operator==(const BoundReport &, const BoundReport &) -> bool = default;
};

enum class StepVerdict { holds, fails, unknown };

auto to_string(StepVerdict v) -> std::string;

struct ProofStep {
    std::string id;
    Rational lhs;
    Rational rhs;
    StepVerdict verdict = StepVerdict::unknown;

    friend auto operator==(const ProofStep &, const ProofStep &) -> bool = default;
};

/// Step-by-step evaluation of the maximum-packing argument:
///   S1  val(q) <= |A| for every k-clique q          (reported as max val vs |A|)
///   S2  sum_{q in A} val(q) <= c_{k+1}
///   S3  sum_A val + sum_B val = (k+1) c_{k+1}
///   S4  k c_{k+1} <= sum_{q in B} val(q)
///   S5  c_{k+1} <= |A||B|/k <= c_k^2/(4k)           (reported as c_{k+1} vs |A||B|/k)
/// where A is a maximum independent family of k-cliques and B the remaining k-cliques.
struct ProofChainReport {
    std::size_t k = 0;
    PackingSolution packing;
    std::uint64_t a_size = 0;
    std::uint64_t b_size = 0;
    std::vector<ProofStep> steps;
    BoundReport final_bound;
    /// Set when the packing was not proven optimal.
    bool tainted = false;
    /// The clique attaining the maximum value (S1 witness).
    std::vector<Vertex> max_value_clique;

    auto step(const std::string & id) const -> const ProofStep &;
};

/// Bound evaluated from census counts alone.
auto bound_from_census(const CliqueCensus & census, std::size_t k) -> BoundReport;

auto check_clique_mantel(const Graph & g, std::size_t k) -> BoundReport;

/// Throws ErrorKind::ineligible unless g is K_{k+2}-free.
auto verify_proof_chain(const Graph & g, std::size_t k, const SolverBudget & budget = {}) -> ProofChainReport;

/// c_k^2/(4k) - c_{k+1}; zero marks an extremal graph. Throws when ineligible.
auto tightness_gap(const Graph & g, std::size_t k) -> Rational;

}
