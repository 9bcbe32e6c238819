#include <cliqueval/graph.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

using std::pair;
using std::size_t;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace cliqueval {

namespace
{
    auto pair_name(Vertex u, Vertex v) -> string
    {
        return "(" + to_string(u) + "," + to_string(v) + ")";
    }
}

auto Graph::from_edge_list(size_t n, const vector<pair<Vertex, Vertex>> & edges) -> Graph
{
    Graph g;
    g._rows.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u == v)
            throw Error(ErrorKind::invalid_argument, "loop at edge " + pair_name(u, v));
        if (u >= n || v >= n)
            throw Error(ErrorKind::out_of_range, "vertex id out of range in edge " + pair_name(u, v)
                    + " for n=" + to_string(n));
        if (g._rows[u].contains(v))
            throw Error(ErrorKind::invalid_argument, "duplicate edge " + pair_name(u, v));
        g._rows[u].insert(v);
        g._rows[v].insert(u);
        ++g._edge_count;
    }
    return g;
}

auto Graph::neighborhood(Vertex v) const -> const VertexSet &
{
    if (v >= _rows.size())
        throw Error(ErrorKind::out_of_range, "vertex " + to_string(v) + " out of range for n=" + to_string(_rows.size()));
    return _rows[v];
}

auto Graph::edges() const -> vector<Edge>
{
    vector<Edge> out;
    out.reserve(_edge_count);
    for (Vertex u = 0; u < _rows.size(); ++u)
        _rows[u].for_each([&](Vertex v) {
            if (u < v)
                out.push_back({u, v});
        });
    return out;
}

auto Graph::has_isolated_vertex() const noexcept -> bool
{
    return std::any_of(_rows.begin(), _rows.end(), [](const VertexSet & r) { return r.empty(); });
}

auto Graph::without_vertex(Vertex v) const -> Graph
{
    if (v >= _rows.size())
        throw Error(ErrorKind::out_of_range, "vertex " + to_string(v) + " out of range for n=" + to_string(_rows.size()));
    vector<pair<Vertex, Vertex>> kept;
    for (auto e : edges()) {
        if (e.u == v || e.v == v)
            continue;
        kept.emplace_back(e.u - (e.u > v ? 1 : 0), e.v - (e.v > v ? 1 : 0));
    }
    return from_edge_list(_rows.size() - 1, kept);
}

namespace
{
    class Tokens {
    public:
        explicit Tokens(string_view text) : _text(text) {}

        auto next(const char * what) -> std::uint64_t
        {
            while (_pos < _text.size() && (_text[_pos] == ' ' || _text[_pos] == '\t' || _text[_pos] == '\n' || _text[_pos] == '\r'))
                ++_pos;
            if (_pos == _text.size())
                throw Error(ErrorKind::parse, string("edge list: unexpected end of input, expected ") + what);
            std::uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(_text.data() + _pos, _text.data() + _text.size(), value);
            if (ec != std::errc{})
                throw Error(ErrorKind::parse, string("edge list: expected unsigned integer for ") + what
                        + " at offset " + to_string(_pos));
            _pos = static_cast<size_t>(ptr - _text.data());
            return value;
        }

        auto at_end() -> bool
        {
            while (_pos < _text.size() && (_text[_pos] == ' ' || _text[_pos] == '\t' || _text[_pos] == '\n' || _text[_pos] == '\r'))
                ++_pos;
            return _pos == _text.size();
        }

    private:
        string_view _text;
        size_t _pos = 0;
    };
}

auto parse_edge_list(string_view text, bool one_based) -> Graph
{
    Tokens tokens(text);
    auto n = tokens.next("vertex count");
    auto m = tokens.next("edge count");
    vector<pair<Vertex, Vertex>> edges;
    edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        auto u = tokens.next("edge endpoint");
        auto v = tokens.next("edge endpoint");
        if (one_based) {
            if (u == 0 || v == 0)
                throw Error(ErrorKind::parse, "edge list: id 0 in one-based input at edge " + to_string(i));
            --u;
            --v;
        }
        if (u > UINT32_MAX || v > UINT32_MAX)
            throw Error(ErrorKind::out_of_range, "edge list: vertex id too large at edge " + to_string(i));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (! tokens.at_end())
        throw Error(ErrorKind::parse, "edge list: trailing data after " + to_string(m) + " edges");
    return Graph::from_edge_list(n, edges);
}

auto format_edge_list(const Graph & g, bool one_based) -> string
{
    std::ostringstream out;
    Vertex shift = one_based ? 1 : 0;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto e : g.edges())
        out << e.u + shift << ' ' << e.v + shift << '\n';
    return out.str();
}

auto encode_graph6(const Graph & g) -> string
{
    auto n = g.vertex_count();
    if (n > 62)
        throw Error(ErrorKind::out_of_range, "graph6: n=" + to_string(n) + " exceeds the single-byte header limit of 62");

    string out;
    out.push_back(static_cast<char>(n + 63));
    unsigned group = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = filled = 0;
            }
        }
    if (filled)
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

auto decode_graph6(string_view text) -> Graph
{
    if (text.empty())
        throw Error(ErrorKind::parse, "graph6: empty string");
    for (size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw Error(ErrorKind::parse, "graph6: non-printable or out-of-range byte " + to_string(c)
                    + " at offset " + to_string(i));
    }
    auto header = static_cast<unsigned char>(text[0]);
    if (header == 126)
        throw Error(ErrorKind::parse, "graph6: long-form size headers (n > 62) are not supported");
    size_t n = header - 63;
    size_t bits = n * (n - (n ? 1 : 0)) / 2;
    size_t expected = (bits + 5) / 6;
    if (text.size() - 1 != expected)
        throw Error(ErrorKind::parse, "graph6: payload length " + to_string(text.size() - 1) + " does not match n="
                + to_string(n) + " (expected " + to_string(expected) + ")");

    vector<pair<Vertex, Vertex>> edges;
    size_t bit = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit) {
            auto value = static_cast<unsigned>(static_cast<unsigned char>(text[1 + bit / 6]) - 63);
            if ((value >> (5 - bit % 6)) & 1U)
                edges.emplace_back(i, j);
        }
    if (bits % 6) {
        auto last = static_cast<unsigned>(static_cast<unsigned char>(text.back()) - 63);
        if (last & ((1U << (6 - bits % 6)) - 1))
            throw Error(ErrorKind::parse, "graph6: nonzero padding bits");
    }
    return Graph::from_edge_list(n, edges);
}

}
