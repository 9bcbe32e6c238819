#include <cliqueval/generators.hpp>

#include <charconv>
#include <random>
#include <string>
#include <vector>

using std::pair;
using std::size_t;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace cliqueval {

namespace
{
    using EdgeList = vector<pair<Vertex, Vertex>>;

    // Partition labels for a complete multipartite graph.
    auto multipartite(const vector<size_t> & part_of) -> Graph
    {
        EdgeList edges;
        auto n = part_of.size();
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (part_of[u] != part_of[v])
                    edges.emplace_back(u, v);
        return Graph::from_edge_list(n, edges);
    }
}

auto complete_graph(size_t n) -> Graph
{
    vector<size_t> parts(n);
    for (size_t i = 0; i < n; ++i)
        parts[i] = i;
    return multipartite(parts);
}

auto cycle_graph(size_t n) -> Graph
{
    if (n < 3)
        throw Error(ErrorKind::invalid_argument, "cycle requires n >= 3, got " + to_string(n));
    EdgeList edges;
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph::from_edge_list(n, edges);
}

auto complete_bipartite_graph(size_t a, size_t b) -> Graph
{
    vector<size_t> parts(a + b, 1);
    for (size_t i = 0; i < a; ++i)
        parts[i] = 0;
    return multipartite(parts);
}

auto turan_graph(size_t n, size_t r) -> Graph
{
    if (r < 1 || r > n)
        throw Error(ErrorKind::invalid_argument, "turan requires 1 <= r <= n, got n=" + to_string(n) + " r=" + to_string(r));
    vector<size_t> parts;
    parts.reserve(n);
    auto base = n / r, extra = n % r;
    for (size_t p = 0; p < r; ++p)
        parts.insert(parts.end(), base + (p < extra ? 1 : 0), p);
    return multipartite(parts);
}

auto book_graph(size_t k) -> Graph
{
    EdgeList edges{{0, 1}};
    for (Vertex page = 2; page < k + 2; ++page) {
        edges.emplace_back(0, page);
        edges.emplace_back(1, page);
    }
    return Graph::from_edge_list(k + 2, edges);
}

auto gnp_graph(size_t n, double p, std::uint64_t seed) -> Graph
{
    if (! (p >= 0.0 && p <= 1.0))
        throw Error(ErrorKind::invalid_argument, "gnp requires 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    EdgeList edges;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            // 53-bit uniform in [0,1), independent of the standard library's distributions
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p)
                edges.emplace_back(i, j);
        }
    return Graph::from_edge_list(n, edges);
}

namespace
{
    auto parse_args(string_view family, string_view args) -> vector<string_view>
    {
        vector<string_view> out;
        while (true) {
            auto comma = args.find(',');
            out.push_back(args.substr(0, comma));
            if (comma == string_view::npos)
                break;
            args.remove_prefix(comma + 1);
        }
        for (auto a : out)
            if (a.empty())
                throw Error(ErrorKind::invalid_argument, "generator " + string(family) + ": empty parameter");
        return out;
    }

    auto as_size(string_view family, string_view text) -> size_t
    {
        size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw Error(ErrorKind::invalid_argument, "generator " + string(family) + ": bad integer '" + string(text) + "'");
        if (value > 100000)
            throw Error(ErrorKind::invalid_argument, "generator " + string(family) + ": parameter too large");
        return value;
    }

    auto as_probability(string_view family, string_view text) -> double
    {
        try {
            size_t used = 0;
            auto s = string(text);
            double p = std::stod(s, &used);
            if (used != s.size())
                throw std::invalid_argument(s);
            return p;
        }
        catch (const std::logic_error &) {
            throw Error(ErrorKind::invalid_argument, "generator " + string(family) + ": bad probability '" + string(text) + "'");
        }
    }

    void expect_arity(string_view family, const vector<string_view> & args, size_t arity)
    {
        if (args.size() != arity)
            throw Error(ErrorKind::invalid_argument, "generator " + string(family) + " takes " + to_string(arity)
                    + " parameter(s), got " + to_string(args.size()));
    }
}

auto generate(string_view spec, std::uint64_t seed) -> Graph
{
    auto colon = spec.find(':');
    if (colon == string_view::npos)
        throw Error(ErrorKind::invalid_argument, "generator spec '" + string(spec) + "' must look like family:params");
    auto family = spec.substr(0, colon);
    auto args = parse_args(family, spec.substr(colon + 1));

    if (family == "complete") {
        expect_arity(family, args, 1);
        return complete_graph(as_size(family, args[0]));
    }
    if (family == "cycle") {
        expect_arity(family, args, 1);
        return cycle_graph(as_size(family, args[0]));
    }
    if (family == "bipartite") {
        expect_arity(family, args, 2);
        return complete_bipartite_graph(as_size(family, args[0]), as_size(family, args[1]));
    }
    if (family == "turan") {
        expect_arity(family, args, 2);
        return turan_graph(as_size(family, args[0]), as_size(family, args[1]));
    }
    if (family == "book") {
        expect_arity(family, args, 1);
        return book_graph(as_size(family, args[0]));
    }
    if (family == "gnp") {
        expect_arity(family, args, 2);
        return gnp_graph(as_size(family, args[0]), as_probability(family, args[1]), seed);
    }
    throw Error(ErrorKind::invalid_argument, "unknown generator family '" + string(family) + "'");
}

auto graph_from_mask(size_t n, std::uint64_t mask) -> Graph
{
    if (pair_count(n) > 64)
        throw Error(ErrorKind::out_of_range, "graph_from_mask: n=" + to_string(n) + " has more than 64 vertex pairs");
    vector<pair<Vertex, Vertex>> edges;
    size_t bit = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1U)
                edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

LabeledGraphStream::LabeledGraphStream(size_t n) :
    _n(n)
{
    if (n > max_exhaustive_vertices)
        throw Error(ErrorKind::limit, "exhaustive sweep limited to n <= " + to_string(max_exhaustive_vertices)
                + ", got n=" + to_string(n));
}

}
