#pragma once

#include <cliqueval/graph.hpp>

#include <cstdint>
#include <string_view>

namespace cliqueval {

auto complete_graph(std::size_t n) -> Graph;
/// Requires n >= 3.
auto cycle_graph(std::size_t n) -> Graph;
/// First part is 0..a-1, second part a..a+b-1.
auto complete_bipartite_graph(std::size_t a, std::size_t b) -> Graph;
/// Complete r-partite graph, part sizes differing by at most one; the
/// n mod r larger parts come first.
auto turan_graph(std::size_t n, std::size_t r) -> Graph;
/// k triangles sharing the edge {0,1}; page vertices are 2..k+1.
auto book_graph(std::size_t k) -> Graph;
/// Erdos-Renyi G(n,p); identical seeds give identical graphs.
auto gnp_graph(std::size_t n, double p, std::uint64_t seed) -> Graph;

/// Builds a graph from a spec such as "turan:6,2", "book:3" or "gnp:10,0.3".
/// Families: complete:N cycle:N bipartite:A,B turan:N,R book:K gnp:N,P.
auto generate(std::string_view spec, std::uint64_t seed = 0) -> Graph;

/// Number of unordered vertex pairs, n choose 2.
constexpr auto pair_count(std::size_t n) -> std::size_t { return n * (n - (n ? 1 : 0)) / 2; }

/// Graph whose edge set is given by mask; bit b is the b-th pair in
/// graph6 column order (0,1),(0,2),(1,2),(0,3),...
auto graph_from_mask(std::size_t n, std::uint64_t mask) -> Graph;

constexpr std::size_t max_exhaustive_vertices = 7;

/// Every labeled graph on n vertices, in increasing mask order.
class LabeledGraphStream {
public:
    explicit LabeledGraphStream(std::size_t n);

    auto vertex_count() const noexcept -> std::size_t { return _n; }
    auto size() const noexcept -> std::uint64_t { return std::uint64_t{1} << pair_count(_n); }

    /// Visits masks in [begin, end); used to shard the stream.
    template <typename Fn>
    void for_each(Fn && fn, std::uint64_t begin = 0, std::uint64_t end = UINT64_MAX) const
    {
        if (end > size())
            end = size();
        for (auto mask = begin; mask < end; ++mask)
            fn(mask, graph_from_mask(_n, mask));
    }

private:
    std::size_t _n;
};

}
