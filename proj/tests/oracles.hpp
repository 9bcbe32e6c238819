#pragma once

// Brute-force references used only by tests. None of these reuse the
// library's enumeration, bitset or search code paths; they only read
// adjacency through Graph::adjacent.

#include <cliqueval/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using cliqueval::Graph;
using cliqueval::Vertex;

inline auto is_clique(const Graph & g, const std::vector<Vertex> & vs) -> bool
{
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (! g.adjacent(vs[i], vs[j]))
                return false;
    return true;
}

/// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn && fn)
{
    if (k > n)
        return;
    std::vector<Vertex> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (auto j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

/// Every k-clique, lexicographic, by testing every k-subset.
inline auto cliques(const Graph & g, std::size_t k) -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> out;
    for_each_subset(g.vertex_count(), k, [&](const std::vector<Vertex> & s) {
        if (is_clique(g, s))
            out.push_back(s);
    });
    return out;
}

inline auto clique_count(const Graph & g, std::size_t k) -> std::uint64_t { return cliques(g, k).size(); }

/// Common neighbours counted vertex by vertex.
inline auto common_neighbours(const Graph & g, const std::vector<Vertex> & q) -> std::uint64_t
{
    std::uint64_t count = 0;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        bool all = true;
        for (auto v : q)
            if (v == w || ! g.adjacent(v, w))
                all = false;
        count += all ? 1 : 0;
    }
    return count;
}

/// Non-induced copies of h in g: vertex subsets of size |V(h)|, edge subsets
/// of size |E(h)| inside them, tested for isomorphism by permutation.
inline auto subgraph_count(const Graph & h, const Graph & g) -> std::uint64_t
{
    auto k = h.vertex_count();
    auto he = h.edges();
    std::uint64_t total = 0;
    for_each_subset(g.vertex_count(), k, [&](const std::vector<Vertex> & vs) {
        std::vector<std::pair<Vertex, Vertex>> inner;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (g.adjacent(vs[i], vs[j]))
                    inner.emplace_back(i, j);
        if (inner.size() < he.size())
            return;
        for_each_subset(inner.size(), he.size(), [&](const std::vector<Vertex> & pick) {
            std::vector<std::vector<bool>> m(k, std::vector<bool>(k, false));
            for (auto p : pick) {
                m[inner[p].first][inner[p].second] = true;
                m[inner[p].second][inner[p].first] = true;
            }
            std::vector<Vertex> perm(k);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                bool ok = true;
                for (const auto & e : he)
                    if (! m[perm[e.u]][perm[e.v]])
                        ok = false;
                if (ok) {
                    ++total;
                    return;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        });
    });
    return total;
}

/// k = 1: non-adjacent vertices; k >= 2: vertex-disjoint cliques.
inline auto conflict(const Graph & g, const std::vector<Vertex> & a, const std::vector<Vertex> & b) -> bool
{
    if (a.size() == 1)
        return a[0] == b[0] || g.adjacent(a[0], b[0]);
    for (auto x : a)
        for (auto y : b)
            if (x == y)
                return true;
    return false;
}

/// Maximum independent family by visiting every independent family of
/// k-cliques (no bounding).
inline auto max_packing(const Graph & g, std::size_t k) -> std::size_t
{
    auto cl = cliques(g, k);
    std::vector<std::size_t> chosen;
    std::size_t best = 0;
    auto visit = [&](auto && self, std::size_t from) -> void {
        best = std::max(best, chosen.size());
        for (auto i = from; i < cl.size(); ++i) {
            bool ok = true;
            for (auto c : chosen)
                if (conflict(g, cl[c], cl[i]))
                    ok = false;
            if (! ok)
                continue;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    visit(visit, 0);
    return best;
}

/// Maximum bipartite matching (Kuhn's augmenting paths); left side = vertices with side[v] == 0.
inline auto bipartite_matching(const Graph & g, const std::vector<int> & side) -> std::size_t
{
    auto n = g.vertex_count();
    std::vector<int> match(n, -1);
    std::size_t size = 0;
    for (Vertex u = 0; u < n; ++u) {
        if (side[u] != 0)
            continue;
        std::vector<bool> seen(n, false);
        auto augment = [&](auto && self, Vertex x) -> bool {
            for (Vertex y = 0; y < n; ++y) {
                if (side[y] != 1 || ! g.adjacent(x, y) || seen[y])
                    continue;
                seen[y] = true;
                if (match[y] < 0 || self(self, static_cast<Vertex>(match[y]))) {
                    match[y] = static_cast<int>(x);
                    return true;
                }
            }
            return false;
        };
        if (augment(augment, u))
            ++size;
    }
    return size;
}

/// graph6 via an explicit bit string.
inline auto graph6(const Graph & g) -> std::string
{
    auto n = g.vertex_count();
    std::string bits;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            bits.push_back(g.adjacent(i, j) ? '1' : '0');
    while (bits.size() % 6)
        bits.push_back('0');
    std::string out(1, static_cast<char>(n + 63));
    for (std::size_t i = 0; i < bits.size(); i += 6)
        out.push_back(static_cast<char>(std::stoi(bits.substr(i, 6), nullptr, 2) + 63));
    return out;
}

inline auto petersen() -> Graph
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edge_list(10, e);
}

/// The four-vertex graph of the worked edge-value example, 1-based labels shifted down.
inline auto g1() -> Graph
{
    return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
}

}
