#pragma once

#include <cliqueval/graph.hpp>

#include <cstdint>
#include <vector>

namespace cliqueval {

/// Strictly increasing list of pairwise adjacent vertices of some host graph.
class Clique {
public:
    /// Sorts the ids and checks pairwise adjacency in g.
    static auto in(const Graph & g, std::vector<Vertex> vertices) -> Clique;

    auto order() const noexcept -> std::size_t { return _vertices.size(); }
    auto vertices() const noexcept -> const std::vector<Vertex> & { return _vertices; }

    friend auto operator<=>(const Clique &, const Clique &) = default;

private:
    explicit Clique(std::vector<Vertex> v) : _vertices(std::move(v)) {}
    friend auto enumerate_cliques(const Graph &, std::size_t) -> std::vector<Clique>;

    std::vector<Vertex> _vertices;
};

/// counts[k-1] = c_k(G) for k = 1..omega; c_k = 0 beyond.
struct CliqueCensus {
    std::vector<std::uint64_t> counts;

    auto clique_number() const noexcept -> std::size_t { return counts.size(); }
    auto count(std::size_t k) const noexcept -> std::uint64_t
    {
        return k >= 1 && k <= counts.size() ? counts[k - 1] : 0;
    }

    friend auto operator==(const CliqueCensus &, const CliqueCensus &) -> bool = default;
};

struct HandshakingReport {
    std::size_t k = 0;
    std::uint64_t value_sum = 0;
    std::uint64_t rhs = 0;
    bool equal = false;

    friend auto operator==(const HandshakingReport &, const HandshakingReport &) -> bool = default;
};

struct KellyReport {
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    bool equal = false;
    std::vector<std::uint64_t> per_vertex;
};

/// Minimum-degree elimination order, ties broken by smaller id.
auto degeneracy_order(const Graph & g) -> std::vector<Vertex>;

/// All k-cliques, each sorted, the list in lexicographic order.
auto enumerate_cliques(const Graph & g, std::size_t k) -> std::vector<Clique>;

/// Vertices adjacent to every member of q.
auto common_neighborhood(const Graph & g, const std::vector<Vertex> & q) -> VertexSet;

/// |common neighbourhood of q|; the degree when q is a single vertex.
auto clique_value(const Graph & g, const Clique & q) -> std::uint64_t;

auto clique_census(const Graph & g) -> CliqueCensus;

/// Compares sum of clique values over all k-cliques with (k+1) c_{k+1}.
auto verify_handshaking(const Graph & g, std::size_t k) -> HandshakingReport;

constexpr std::size_t max_pattern_vertices = 8;

/// Number of (not necessarily induced) subgraphs of g isomorphic to h.
auto subgraph_count(const Graph & h, const Graph & g) -> std::uint64_t;

/// Edge-preserving injective maps V(h) -> V(g).
auto injective_homomorphism_count(const Graph & h, const Graph & g) -> std::uint64_t;

/// Throws ErrorKind::ineligible when g has an isolated vertex.
auto verify_kelly(const Graph & h, const Graph & g) -> KellyReport;

}
