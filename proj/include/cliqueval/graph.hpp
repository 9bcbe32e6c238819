#pragma once

#include <cliqueval/error.hpp>
#include <cliqueval/vertex_set.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliqueval {

struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Immutable simple undirected graph with per-vertex adjacency bit rows.
///
/// Construction goes through from_edge_list (or one of the codecs and
/// generators built on it); every instance is symmetric and loop-free.
class Graph {
public:
    Graph() = default;

    /// Rejects loops, out-of-range ids and duplicate pairs in either order.
    static auto from_edge_list(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> & edges) -> Graph;

    auto vertex_count() const noexcept -> std::size_t { return _rows.size(); }
    auto edge_count() const noexcept -> std::uint64_t { return _edge_count; }

    auto adjacent(Vertex u, Vertex v) const noexcept -> bool { return _rows[u].contains(v); }

    /// Open neighbourhood; v itself is never a member.
    auto neighborhood(Vertex v) const -> const VertexSet &;
    auto degree(Vertex v) const -> std::size_t { return neighborhood(v).size(); }

    /// Edges with u < v, sorted.
    auto edges() const -> std::vector<Edge>;

    auto has_isolated_vertex() const noexcept -> bool;

    /// G - v: deletes v and its incident edges; vertices above v shift down by one.
    auto without_vertex(Vertex v) const -> Graph;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    std::vector<VertexSet> _rows;
    std::uint64_t _edge_count = 0;
};

/// Parses "n m" followed by m lines "u v". With one_based, ids are shifted down by one.
auto parse_edge_list(std::string_view text, bool one_based = false) -> Graph;

/// Inverse of parse_edge_list (0-based unless one_based).
auto format_edge_list(const Graph & g, bool one_based = false) -> std::string;

auto encode_graph6(const Graph & g) -> std::string;
auto decode_graph6(std::string_view text) -> Graph;

}
