#pragma once

#include <cliqueval/clique.hpp>

#include <cstdint>
#include <vector>

namespace cliqueval {

struct SolverBudget {
    std::uint64_t node_limit = 10'000'000;
    double time_limit_seconds = 60.0;
};

/// An independent family of k-cliques.
///
/// Two k-cliques conflict when they share a vertex or lie together in a
/// (k+1)-clique. For k = 1 this is adjacency (independent vertex sets); for
/// k >= 2 it is exactly vertex-disjointness (matchings at k = 2).
struct PackingSolution {
    std::size_t k = 0;
    std::vector<Clique> members;
    bool optimal = false;
    std::uint64_t nodes = 0;

    auto size() const noexcept -> std::size_t { return members.size(); }
};

/// Whether two k-cliques of g may both belong to an independent family.
auto cliques_conflict(const Graph & g, const Clique & a, const Clique & b) -> bool;

/// True iff no vertex appears in two members.
auto is_vertex_disjoint(const std::vector<Clique> & members) -> bool;

/// True iff every member is a k-clique of g and no two conflict.
auto is_independent_family(const Graph & g, std::size_t k, const std::vector<Clique> & members) -> bool;

/// Exact maximum independent family via branch and bound; among optimal
/// families returns the lexicographically least member list. On budget
/// exhaustion returns the best family found with optimal = false.
auto max_clique_packing(const Graph & g, std::size_t k, const SolverBudget & budget = {}) -> PackingSolution;

/// Canonical-order greedy scan. Maximal, never flagged optimal.
auto greedy_maximal_packing(const Graph & g, std::size_t k) -> PackingSolution;

}
