#ifndef LOOSE_RAMSEY_HYPERGRAPH_HH
#define LOOSE_RAMSEY_HYPERGRAPH_HH 1

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace loose_ramsey
{
    using Vertex = std::uint32_t;

    enum class Color : std::uint8_t
    {
        red,
        blue
    };

    constexpr auto opposite(Color c) -> Color
    {
        return c == Color::red ? Color::blue : Color::red;
    }

    auto to_string(Color c) -> std::string;
    auto parse_color(const std::string &) -> Color;

    enum class Shape : std::uint8_t
    {
        path,
        cycle
    };

    auto to_string(Shape s) -> std::string;
    auto parse_shape(const std::string &) -> Shape;

    /// Raised when a vertex sequence does not describe a loose path or cycle.
    class StructuralError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Raised when an operation is asked for something outside its parameter domain.
    class ParameterError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    auto binomial(std::uint64_t n, unsigned k) -> std::uint64_t;

    /// Number of triples on n vertices, C(n,3).
    inline auto triple_count(Vertex n) -> std::uint64_t
    {
        return binomial(n, 3);
    }

    /// An unordered 3-subset of vertex labels, stored ascending.
    struct TripleEdge
    {
        Vertex a, b, c;

        /// Sorts the labels; throws StructuralError unless they are distinct.
        static auto of(Vertex x, Vertex y, Vertex z) -> TripleEdge;

        auto contains(Vertex v) const -> bool { return v == a || v == b || v == c; }
        auto operator<=>(const TripleEdge &) const = default;
    };

    auto to_string(const TripleEdge &) -> std::string;

    /// C(c,3) + C(b,2) + C(a,1).
    inline auto colex_rank(const TripleEdge & e) -> std::uint64_t
    {
        std::uint64_t c = e.c, b = e.b;
        return c * (c - 1) * (c - 2) / 6 + b * (b - 1) / 2 + e.a;
    }

    /// Inverse of colex_rank over n vertices; throws std::out_of_range for rank >= C(n,3).
    auto colex_unrank(std::uint64_t rank, Vertex n) -> TripleEdge;

    /// A complete red/blue colouring of the 3-uniform complete hypergraph, stored as a
    /// red bitmap in colex order.
    class Coloring
    {
    private:
        Vertex _n;
        std::vector<std::uint64_t> _red;

    public:
        explicit Coloring(Vertex n, Color fill = Color::blue);

        auto size() const -> Vertex { return _n; }
        auto triples() const -> std::uint64_t { return triple_count(_n); }

        /// Range checked lookup.
        auto color(const TripleEdge & e) const -> Color;

        /// Unchecked lookup on three distinct labels in any order.
        auto color(Vertex x, Vertex y, Vertex z) const -> Color
        {
            if (x > y) std::swap(x, y);
            if (y > z) std::swap(y, z);
            if (x > y) std::swap(x, y);
            return color_at_rank(colex_rank(TripleEdge{x, y, z}));
        }

        auto is(Color col, Vertex x, Vertex y, Vertex z) const -> bool
        {
            return color(x, y, z) == col;
        }

        auto color_at_rank(std::uint64_t rank) const -> Color
        {
            return (_red[rank >> 6] >> (rank & 63)) & 1 ? Color::red : Color::blue;
        }

        void set(const TripleEdge & e, Color col);
        void set_at_rank(std::uint64_t rank, Color col);

        auto count(Color col) const -> std::uint64_t;

        /// Same vertex count, every colour swapped.
        auto complement() const -> Coloring;

        /// Colouring of the labels permuted by perm: new colour of {perm[x],perm[y],perm[z]}
        /// equals old colour of {x,y,z}.
        auto relabeled(std::span<const Vertex> perm) const -> Coloring;

        auto operator==(const Coloring &) const -> bool = default;
    };

    /// Ordered vertex sequence v_1..v_{2l+1}; edge i is {v_{2i-1}, v_{2i}, v_{2i+1}}.
    class LoosePath
    {
    private:
        std::vector<Vertex> _vertices;

        explicit LoosePath(std::vector<Vertex> v) : _vertices(std::move(v)) {}
        friend auto validate_loose_path(std::span<const Vertex>) -> LoosePath;

    public:
        auto length() const -> unsigned { return static_cast<unsigned>(_vertices.size() / 2); }
        auto vertices() const -> const std::vector<Vertex> & { return _vertices; }
        auto edge(unsigned i) const -> TripleEdge;
        auto edges() const -> std::vector<TripleEdge>;

        /// First and last vertex of edge i in path order.
        auto first_of(unsigned i) const -> Vertex { return _vertices[2 * i]; }
        auto last_of(unsigned i) const -> Vertex { return _vertices[2 * i + 2]; }
    };

    /// Ordered vertex sequence v_1..v_{2l}; edges wrap around.
    class LooseCycle
    {
    private:
        std::vector<Vertex> _vertices;

        explicit LooseCycle(std::vector<Vertex> v) : _vertices(std::move(v)) {}
        friend auto validate_loose_cycle(std::span<const Vertex>) -> LooseCycle;

    public:
        auto length() const -> unsigned { return static_cast<unsigned>(_vertices.size() / 2); }
        auto vertices() const -> const std::vector<Vertex> & { return _vertices; }
        auto edge(unsigned i) const -> TripleEdge;
        auto edges() const -> std::vector<TripleEdge>;
    };

    auto validate_loose_path(std::span<const Vertex> vertices) -> LoosePath;
    auto validate_loose_cycle(std::span<const Vertex> vertices) -> LooseCycle;

    /// Edges of a path or cycle given by its vertex sequence, without validation.
    auto structure_edges(Shape shape, std::span<const Vertex> vertices) -> std::vector<TripleEdge>;

    inline auto structure_length(Shape, std::size_t vertex_count) -> unsigned
    {
        return static_cast<unsigned>(vertex_count / 2);
    }

    struct Witness
    {
        Color color;
        Shape shape;
        std::vector<Vertex> vertices;

        auto length() const -> unsigned { return structure_length(shape, vertices.size()); }
        auto edges() const -> std::vector<TripleEdge> { return structure_edges(shape, vertices); }
        auto operator==(const Witness &) const -> bool = default;
    };

    /// "red path 0 1 2 3 4"
    auto to_string(const Witness &) -> std::string;
    auto parse_witness(const std::string &) -> Witness;

    struct Verdict
    {
        bool accepted;
        std::string reason;

        explicit operator bool() const { return accepted; }
    };

    auto verify_witness(const Coloring &, const Witness &) -> Verdict;

    /// Colour, shape and length all as given.
    auto witness_matches(const Witness &, Color, Shape, unsigned length) -> bool;
}

#endif
