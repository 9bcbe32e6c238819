#include <cliqueval/packing.hpp>

#include <algorithm>
#include <chrono>
#include <string>

using std::size_t;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace cliqueval {

auto cliques_conflict(const Graph & g, const Clique & a, const Clique & b) -> bool
{
    const auto & x = a.vertices();
    const auto & y = b.vertices();
    vector<Vertex> merged;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(merged));
    if (merged.size() < x.size() + y.size())
        return true;
    // disjoint: only k = 1 can fit both inside a (k+1)-clique
    if (merged.size() != x.size() + 1)
        return false;
    for (size_t i = 0; i < merged.size(); ++i)
        for (size_t j = i + 1; j < merged.size(); ++j)
            if (! g.adjacent(merged[i], merged[j]))
                return false;
    return true;
}

auto is_vertex_disjoint(const vector<Clique> & members) -> bool
{
    vector<Vertex> all;
    for (const auto & q : members)
        all.insert(all.end(), q.vertices().begin(), q.vertices().end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

auto is_independent_family(const Graph & g, size_t k, const vector<Clique> & members) -> bool
{
    for (const auto & q : members) {
        if (q.order() != k)
            return false;
        try {
            Clique::in(g, q.vertices());
        }
        catch (const Error &) {
            return false;
        }
    }
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (members[i] == members[j] || cliques_conflict(g, members[i], members[j]))
                return false;
    return true;
}

namespace
{
    using IndexSet = VertexSet;

    struct ConflictStructure {
        vector<Clique> cliques;
        vector<IndexSet> conflicts;
        vector<VertexSet> spans;
    };

    auto build_conflicts(const Graph & g, size_t k) -> ConflictStructure
    {
        ConflictStructure cs;
        cs.cliques = enumerate_cliques(g, k);
        auto count = cs.cliques.size();
        auto n = g.vertex_count();
        cs.conflicts.assign(count, IndexSet(count));
        cs.spans.assign(count, VertexSet(n));

        vector<vector<size_t>> containing(n);
        for (size_t i = 0; i < count; ++i)
            for (auto v : cs.cliques[i].vertices()) {
                containing[v].push_back(i);
                cs.spans[i].insert(v);
            }

        if (k == 1) {
            // the 1-clique at index v is vertex v
            for (Vertex v = 0; v < n; ++v)
                cs.conflicts[v] = g.neighborhood(v);
        }
        else {
            for (const auto & group : containing)
                for (auto i : group)
                    for (auto j : group)
                        if (i != j)
                            cs.conflicts[i].insert(static_cast<Vertex>(j));
        }
        return cs;
    }

    class BranchAndBound {
    public:
        BranchAndBound(const ConflictStructure & cs, size_t k, const SolverBudget & budget) :
            _cs(cs), _k(k), _budget(budget), _start(std::chrono::steady_clock::now())
        {
        }

        void seed(vector<size_t> initial) { _best = std::move(initial); }

        void run()
        {
            IndexSet all(_cs.cliques.size());
            for (size_t i = 0; i < _cs.cliques.size(); ++i)
                all.insert(static_cast<Vertex>(i));
            vector<size_t> chosen;
            search(chosen, all);
        }

        auto best() const -> const vector<size_t> & { return _best; }
        auto aborted() const -> bool { return _aborted; }
        auto nodes() const -> uint64_t { return _nodes; }

    private:
        auto out_of_budget() -> bool
        {
            if (_aborted)
                return true;
            if (_nodes >= _budget.node_limit)
                _aborted = true;
            else if ((_nodes & 255) == 0) {
                std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - _start;
                if (elapsed.count() >= _budget.time_limit_seconds)
                    _aborted = true;
            }
            return _aborted;
        }

        // Greedy partition of candidates into mutually conflicting groups.
        auto cover_bound(IndexSet remaining) const -> size_t
        {
            size_t groups = 0;
            while (! remaining.empty()) {
                auto first = static_cast<Vertex>(remaining.first());
                remaining.erase(first);
                auto pool = remaining & _cs.conflicts[first];
                while (! pool.empty()) {
                    auto next = static_cast<Vertex>(pool.first());
                    remaining.erase(next);
                    pool.erase(next);
                    pool &= _cs.conflicts[next];
                }
                ++groups;
            }
            return groups;
        }

        auto vertex_bound(const IndexSet & candidates) const -> size_t
        {
            if (_k == 1)
                return candidates.size();
            VertexSet covered(_cs.spans.empty() ? 0 : _cs.spans[0].capacity());
            candidates.for_each([&](Vertex i) { covered |= _cs.spans[i]; });
            return covered.size() / _k;
        }

        void search(vector<size_t> & chosen, IndexSet candidates)
        {
            ++_nodes;
            if (out_of_budget())
                return;
            if (candidates.empty()) {
                if (chosen.size() > _best.size())
                    _best = chosen;
                return;
            }
            auto bound = std::min(candidates.size(), vertex_bound(candidates));
            if (chosen.size() + bound <= _best.size())
                return;
            if (chosen.size() + cover_bound(candidates) <= _best.size())
                return;

            auto pick = static_cast<Vertex>(candidates.first());
            candidates.erase(pick);

            auto with = candidates;
            with.subtract(_cs.conflicts[pick]);
            chosen.push_back(pick);
            search(chosen, with);
            chosen.pop_back();

            search(chosen, candidates);
        }

        const ConflictStructure & _cs;
        size_t _k;
        SolverBudget _budget;
        std::chrono::steady_clock::time_point _start;
        vector<size_t> _best;
        uint64_t _nodes = 0;
        bool _aborted = false;
    };

    auto greedy_indices(const ConflictStructure & cs) -> vector<size_t>
    {
        vector<size_t> accepted;
        IndexSet blocked(cs.cliques.size());
        for (size_t i = 0; i < cs.cliques.size(); ++i) {
            if (blocked.contains(static_cast<Vertex>(i)))
                continue;
            accepted.push_back(i);
            blocked |= cs.conflicts[i];
        }
        return accepted;
    }

    auto certify(const Graph & g, size_t k, const ConflictStructure & cs, const vector<size_t> & picked) -> vector<Clique>
    {
        vector<Clique> members;
        for (auto i : picked)
            members.push_back(cs.cliques[i]);
        if (! is_independent_family(g, k, members))
            throw Error(ErrorKind::internal, "packing solver produced an invalid family");
        return members;
    }
}

auto max_clique_packing(const Graph & g, size_t k, const SolverBudget & budget) -> PackingSolution
{
    if (k < 1)
        throw Error(ErrorKind::invalid_argument, "packing requires k >= 1");
    if (budget.node_limit == 0 || ! (budget.time_limit_seconds > 0))
        throw Error(ErrorKind::invalid_argument, "solver budget limits must be positive");

    auto cs = build_conflicts(g, k);
    BranchAndBound solver(cs, k, budget);
    // the greedy scan is the first leaf of the include-first search, so
    // seeding with it keeps the lexicographically least optimum
    solver.seed(greedy_indices(cs));
    solver.run();

    PackingSolution solution;
    solution.k = k;
    solution.members = certify(g, k, cs, solver.best());
    solution.optimal = ! solver.aborted();
    solution.nodes = solver.nodes();
    return solution;
}

auto greedy_maximal_packing(const Graph & g, size_t k) -> PackingSolution
{
    if (k < 1)
        throw Error(ErrorKind::invalid_argument, "packing requires k >= 1");
    auto cs = build_conflicts(g, k);
    PackingSolution solution;
    solution.k = k;
    solution.members = certify(g, k, cs, greedy_indices(cs));
    solution.optimal = false;
    return solution;
}

}
