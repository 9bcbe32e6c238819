#include <cliqueval/clique.hpp>

#include <algorithm>
#include <string>

using std::size_t;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace cliqueval {

auto Clique::in(const Graph & g, vector<Vertex> vertices) -> Clique
{
    if (vertices.empty())
        throw Error(ErrorKind::invalid_argument, "a clique needs at least one vertex");
    std::sort(vertices.begin(), vertices.end());
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.vertex_count())
            throw Error(ErrorKind::out_of_range, "clique vertex " + to_string(vertices[i]) + " out of range");
        if (i > 0 && vertices[i] == vertices[i - 1])
            throw Error(ErrorKind::invalid_argument, "clique lists vertex " + to_string(vertices[i]) + " twice");
        for (size_t j = 0; j < i; ++j)
            if (! g.adjacent(vertices[j], vertices[i]))
                throw Error(ErrorKind::invalid_argument, "not a clique: " + to_string(vertices[j]) + " and "
                        + to_string(vertices[i]) + " are not adjacent");
    }
    return Clique(std::move(vertices));
}

auto degeneracy_order(const Graph & g) -> vector<Vertex>
{
    auto n = g.vertex_count();
    vector<size_t> degree(n);
    vector<bool> removed(n, false);
    for (Vertex v = 0; v < n; ++v)
        degree[v] = g.degree(v);

    vector<Vertex> order;
    order.reserve(n);
    for (size_t step = 0; step < n; ++step) {
        Vertex best = 0;
        bool found = false;
        for (Vertex v = 0; v < n; ++v)
            if (! removed[v] && (! found || degree[v] < degree[best])) {
                best = v;
                found = true;
            }
        removed[best] = true;
        order.push_back(best);
        g.neighborhood(best).for_each([&](Vertex u) {
            if (! removed[u])
                --degree[u];
        });
    }
    return order;
}

namespace
{
    // later[v] = neighbours of v that come after v in the degeneracy order.
    auto forward_neighborhoods(const Graph & g) -> vector<VertexSet>
    {
        auto n = g.vertex_count();
        auto order = degeneracy_order(g);
        vector<size_t> rank(n);
        for (size_t i = 0; i < n; ++i)
            rank[order[i]] = i;

        vector<VertexSet> later(n, VertexSet(n));
        for (Vertex v = 0; v < n; ++v)
            g.neighborhood(v).for_each([&](Vertex u) {
                if (rank[u] > rank[v])
                    later[v].insert(u);
            });
        return later;
    }

    struct Expander {
        const vector<VertexSet> & later;
        size_t k;
        vector<Vertex> current;
        vector<vector<Vertex>> found;

        void expand(const VertexSet & candidates)
        {
            if (current.size() == k) {
                found.push_back(current);
                return;
            }
            candidates.for_each([&](Vertex u) {
                current.push_back(u);
                expand(candidates & later[u]);
                current.pop_back();
            });
        }
    };

    struct Counter {
        const vector<VertexSet> & later;
        vector<uint64_t> counts;

        void expand(const VertexSet & candidates, size_t depth)
        {
            candidates.for_each([&](Vertex u) {
                if (counts.size() <= depth)
                    counts.push_back(0);
                ++counts[depth];
                auto next = candidates & later[u];
                if (! next.empty())
                    expand(next, depth + 1);
            });
        }
    };

    auto all_vertices(size_t n) -> VertexSet
    {
        VertexSet s(n);
        for (Vertex v = 0; v < n; ++v)
            s.insert(v);
        return s;
    }
}

auto enumerate_cliques(const Graph & g, size_t k) -> vector<Clique>
{
    if (k < 1)
        throw Error(ErrorKind::invalid_argument, "clique order must be at least 1");
    auto later = forward_neighborhoods(g);
    Expander expander{later, k, {}, {}};
    expander.expand(all_vertices(g.vertex_count()));

    vector<Clique> out;
    out.reserve(expander.found.size());
    for (auto & q : expander.found) {
        std::sort(q.begin(), q.end());
        out.push_back(Clique(std::move(q)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

auto common_neighborhood(const Graph & g, const vector<Vertex> & q) -> VertexSet
{
    if (q.empty())
        throw Error(ErrorKind::invalid_argument, "common neighbourhood of an empty vertex list");
    auto common = g.neighborhood(q.front());
    for (size_t i = 1; i < q.size(); ++i)
        common &= g.neighborhood(q[i]);
    return common;
}

auto clique_value(const Graph & g, const Clique & q) -> uint64_t
{
    // q may have been built against a different graph
    Clique::in(g, q.vertices());
    return common_neighborhood(g, q.vertices()).size();
}

auto clique_census(const Graph & g) -> CliqueCensus
{
    auto later = forward_neighborhoods(g);
    Counter counter{later, {}};
    counter.expand(all_vertices(g.vertex_count()), 0);
    return CliqueCensus{std::move(counter.counts)};
}

auto verify_handshaking(const Graph & g, size_t k) -> HandshakingReport
{
    if (k < 1)
        throw Error(ErrorKind::invalid_argument, "handshaking requires k >= 1");
    HandshakingReport report;
    report.k = k;
    for (const auto & q : enumerate_cliques(g, k))
        report.value_sum += common_neighborhood(g, q.vertices()).size();
    report.rhs = (k + 1) * clique_census(g).count(k + 1);
    report.equal = report.value_sum == report.rhs;
    return report;
}

namespace
{
    // Pattern vertices ordered so that each one after the first in its
    // component has an already-placed neighbour.
    auto placement_order(const Graph & h) -> vector<Vertex>
    {
        auto k = h.vertex_count();
        vector<Vertex> order;
        vector<bool> placed(k, false);
        while (order.size() < k) {
            Vertex best = 0;
            long best_score = -1;
            for (Vertex v = 0; v < k; ++v) {
                if (placed[v])
                    continue;
                long links = 0;
                for (auto u : order)
                    links += h.adjacent(u, v) ? 1 : 0;
                long score = links * 64 + static_cast<long>(h.degree(v));
                if (score > best_score) {
                    best = v;
                    best_score = score;
                }
            }
            placed[best] = true;
            order.push_back(best);
        }
        return order;
    }

    struct Mapper {
        const Graph & h;
        const Graph & g;
        vector<Vertex> order;
        vector<Vertex> image;
        VertexSet used;
        uint64_t total = 0;

        void place(size_t depth)
        {
            if (depth == order.size()) {
                ++total;
                return;
            }
            auto hv = order[depth];
            VertexSet candidates(g.vertex_count());
            bool constrained = false;
            for (size_t i = 0; i < depth; ++i)
                if (h.adjacent(order[i], hv)) {
                    if (! constrained) {
                        candidates = g.neighborhood(image[order[i]]);
                        constrained = true;
                    }
                    else
                        candidates &= g.neighborhood(image[order[i]]);
                }
            if (! constrained)
                for (Vertex v = 0; v < g.vertex_count(); ++v)
                    candidates.insert(v);
            candidates.subtract(used);
            candidates.for_each([&](Vertex gv) {
                image[hv] = gv;
                used.insert(gv);
                place(depth + 1);
                used.erase(gv);
            });
        }
    };

    void check_pattern(const Graph & h)
    {
        if (h.vertex_count() == 0)
            throw Error(ErrorKind::invalid_argument, "pattern graph H is empty");
        if (h.vertex_count() > max_pattern_vertices)
            throw Error(ErrorKind::limit, "pattern graph H has " + to_string(h.vertex_count()) + " vertices, limit is "
                    + to_string(max_pattern_vertices));
    }
}

auto injective_homomorphism_count(const Graph & h, const Graph & g) -> uint64_t
{
    check_pattern(h);
    if (h.vertex_count() > g.vertex_count())
        return 0;
    Mapper mapper{h, g, placement_order(h), vector<Vertex>(h.vertex_count()), VertexSet(g.vertex_count())};
    mapper.place(0);
    return mapper.total;
}

auto subgraph_count(const Graph & h, const Graph & g) -> uint64_t
{
    check_pattern(h);
    // every copy is hit once per automorphism of h
    auto automorphisms = injective_homomorphism_count(h, h);
    return injective_homomorphism_count(h, g) / automorphisms;
}

auto verify_kelly(const Graph & h, const Graph & g) -> KellyReport
{
    check_pattern(h);
    if (g.has_isolated_vertex())
        throw Error(ErrorKind::ineligible, "Kelly identity requires a host graph without isolated vertices");
    auto n = g.vertex_count(), k = h.vertex_count();
    if (k > n)
        throw Error(ErrorKind::invalid_argument, "pattern has more vertices (" + to_string(k) + ") than host ("
                + to_string(n) + ")");

    KellyReport report;
    report.lhs = (n - k) * subgraph_count(h, g);
    for (Vertex v = 0; v < n; ++v) {
        report.per_vertex.push_back(subgraph_count(h, g.without_vertex(v)));
        report.rhs += report.per_vertex.back();
    }
    report.equal = report.lhs == report.rhs;
    return report;
}

}
