#include <loose_ramsey/hypergraph.hh>

#include <algorithm>
#include <bit>
#include <sstream>

using std::string;
using std::vector;

namespace loose_ramsey
{
    using std::to_string;

    auto to_string(Color c) -> string
    {
        return c == Color::red ? "red" : "blue";
    }

    auto parse_color(const string & s) -> Color
    {
        if (s == "red") return Color::red;
        if (s == "blue") return Color::blue;
        throw ParameterError("unknown colour '" + s + "'");
    }

    auto to_string(Shape s) -> string
    {
        return s == Shape::path ? "path" : "cycle";
    }

    auto parse_shape(const string & s) -> Shape
    {
        if (s == "path") return Shape::path;
        if (s == "cycle") return Shape::cycle;
        throw ParameterError("unknown shape '" + s + "'");
    }

    auto binomial(std::uint64_t n, unsigned k) -> std::uint64_t
    {
        if (k > n) return 0;
        std::uint64_t r = 1;
        for (unsigned i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return r;
    }

    auto TripleEdge::of(Vertex x, Vertex y, Vertex z) -> TripleEdge
    {
        if (x > y) std::swap(x, y);
        if (y > z) std::swap(y, z);
        if (x > y) std::swap(x, y);
        if (x == y || y == z)
            throw StructuralError("triple {" + to_string(x) + "," + to_string(y) + "," + to_string(z) + "} repeats a vertex");
        return TripleEdge{x, y, z};
    }

    auto to_string(const TripleEdge & e) -> string
    {
        return "{" + to_string(e.a) + "," + to_string(e.b) + "," + to_string(e.c) + "}";
    }

    auto colex_unrank(std::uint64_t rank, Vertex n) -> TripleEdge
    {
        if (rank >= triple_count(n))
            throw std::out_of_range("colex rank " + to_string(rank) + " out of range for " + to_string(n) + " vertices");

        // largest c with C(c,3) <= rank, then b, then a
        Vertex c = 2;
        while (binomial(c + 1, 3) <= rank) ++c;
        rank -= binomial(c, 3);
        Vertex b = 1;
        while (binomial(b + 1, 2) <= rank) ++b;
        rank -= binomial(b, 2);
        return TripleEdge{static_cast<Vertex>(rank), b, c};
    }

    Coloring::Coloring(Vertex n, Color fill) :
        _n(n),
        _red((triple_count(n) + 63) / 64, fill == Color::red ? ~std::uint64_t{0} : 0)
    {
        // keep padding bits clear so equality and counting are exact
        if (auto tail = triple_count(n) % 64; tail != 0 && ! _red.empty())
            _red.back() &= (std::uint64_t{1} << tail) - 1;
    }

    auto Coloring::color(const TripleEdge & e) const -> Color
    {
        if (e.c >= _n)
            throw std::out_of_range("edge " + to_string(e) + " has a label outside " + to_string(_n) + " vertices");
        return color_at_rank(colex_rank(e));
    }

    void Coloring::set(const TripleEdge & e, Color col)
    {
        if (e.c >= _n)
            throw std::out_of_range("edge " + to_string(e) + " has a label outside " + to_string(_n) + " vertices");
        set_at_rank(colex_rank(e), col);
    }

    void Coloring::set_at_rank(std::uint64_t rank, Color col)
    {
        auto bit = std::uint64_t{1} << (rank & 63);
        if (col == Color::red)
            _red[rank >> 6] |= bit;
        else
            _red[rank >> 6] &= ~bit;
    }

    auto Coloring::count(Color col) const -> std::uint64_t
    {
        std::uint64_t reds = 0;
        for (auto w : _red)
            reds += std::popcount(w);
        return col == Color::red ? reds : triples() - reds;
    }

    auto Coloring::complement() const -> Coloring
    {
        Coloring result(_n, Color::red);
        for (std::size_t i = 0; i < _red.size(); ++i)
            result._red[i] &= ~_red[i];
        return result;
    }

    auto Coloring::relabeled(std::span<const Vertex> perm) const -> Coloring
    {
        if (perm.size() != _n)
            throw ParameterError("permutation size does not match vertex count");
        Coloring result(_n);
        for (std::uint64_t r = 0, t = triples(); r < t; ++r)
            if (color_at_rank(r) == Color::red) {
                auto e = colex_unrank(r, _n);
                result.set(TripleEdge::of(perm[e.a], perm[e.b], perm[e.c]), Color::red);
            }
        return result;
    }

    namespace
    {
        void require_distinct(std::span<const Vertex> vertices)
        {
            vector<Vertex> sorted(vertices.begin(), vertices.end());
            std::sort(sorted.begin(), sorted.end());
            if (auto d = std::adjacent_find(sorted.begin(), sorted.end()); d != sorted.end())
                throw StructuralError("duplicate vertex " + to_string(*d));
        }
    }

    auto validate_loose_path(std::span<const Vertex> vertices) -> LoosePath
    {
        if (vertices.size() < 3)
            throw StructuralError("a loose path needs at least 3 vertices, got " + to_string(vertices.size()));
        if (vertices.size() % 2 == 0)
            throw StructuralError("even vertex count " + to_string(vertices.size()) + " cannot decompose into a loose path");
        require_distinct(vertices);
        return LoosePath(vector<Vertex>(vertices.begin(), vertices.end()));
    }

    auto validate_loose_cycle(std::span<const Vertex> vertices) -> LooseCycle
    {
        if (vertices.size() % 2 != 0)
            throw StructuralError("odd vertex count " + to_string(vertices.size()) + " cannot decompose into a loose cycle");
        if (vertices.size() < 6)
            throw StructuralError("cycle length " + to_string(vertices.size() / 2) + " is below the minimum of 3");
        require_distinct(vertices);
        return LooseCycle(vector<Vertex>(vertices.begin(), vertices.end()));
    }

    auto LoosePath::edge(unsigned i) const -> TripleEdge
    {
        return TripleEdge::of(_vertices[2 * i], _vertices[2 * i + 1], _vertices[2 * i + 2]);
    }

    auto LoosePath::edges() const -> vector<TripleEdge>
    {
        return structure_edges(Shape::path, _vertices);
    }

    auto LooseCycle::edge(unsigned i) const -> TripleEdge
    {
        return TripleEdge::of(_vertices[2 * i], _vertices[2 * i + 1], _vertices[(2 * i + 2) % _vertices.size()]);
    }

    auto LooseCycle::edges() const -> vector<TripleEdge>
    {
        return structure_edges(Shape::cycle, _vertices);
    }

    auto structure_edges(Shape shape, std::span<const Vertex> v) -> vector<TripleEdge>
    {
        vector<TripleEdge> result;
        auto len = structure_length(shape, v.size());
        result.reserve(len);
        for (unsigned i = 0; i < len; ++i)
            result.push_back(TripleEdge::of(v[2 * i], v[2 * i + 1], v[(2 * i + 2) % v.size()]));
        return result;
    }

    auto to_string(const Witness & w) -> string
    {
        string result = to_string(w.color) + " " + to_string(w.shape);
        for (auto v : w.vertices)
            result += " " + to_string(v);
        return result;
    }

    auto parse_witness(const string & text) -> Witness
    {
        std::istringstream in(text);
        string color, shape;
        if (! (in >> color >> shape))
            throw ParameterError("witness must start with '<colour> <shape>'");
        Witness w{parse_color(color), parse_shape(shape), {}};
        long long v;
        while (in >> v) {
            if (v < 0)
                throw ParameterError("negative vertex label in witness");
            w.vertices.push_back(static_cast<Vertex>(v));
        }
        if (! in.eof())
            throw ParameterError("unparseable vertex label in witness");
        return w;
    }

    auto verify_witness(const Coloring & c, const Witness & w) -> Verdict
    {
        try {
            if (w.shape == Shape::path)
                validate_loose_path(w.vertices);
            else
                validate_loose_cycle(w.vertices);
        }
        catch (const StructuralError & e) {
            return Verdict{false, e.what()};
        }

        for (auto v : w.vertices)
            if (v >= c.size())
                return Verdict{false, "vertex " + to_string(v) + " outside " + to_string(c.size()) + " vertices"};

        for (auto & e : w.edges())
            if (auto col = c.color(e); col != w.color)
                return Verdict{false, "edge " + to_string(e) + " is " + to_string(col)};

        return Verdict{true, ""};
    }

    auto witness_matches(const Witness & w, Color color, Shape shape, unsigned length) -> bool
    {
        return w.color == color && w.shape == shape && w.length() == length;
    }
}
