#ifndef LOOSE_RAMSEY_CONSTRUCTIONS_HH
#define LOOSE_RAMSEY_CONSTRUCTIONS_HH 1

#include <loose_ramsey/hypergraph.hh>

#include <string>

namespace loose_ramsey
{
    /// A Ramsey pair. n is always the longer length and m the shorter one, so for
    /// pmcn the red target is the path P_m and the blue target the cycle C_n.
    struct PairKind
    {
        enum class Kind : std::uint8_t
        {
            pp,
            cc,
            pncm,
            pmcn
        };

        Kind kind;
        unsigned n, m;

        auto operator==(const PairKind &) const -> bool = default;
    };

    auto to_string(PairKind::Kind) -> std::string;
    auto to_string(const PairKind &) -> std::string;
    auto parse_pair_kind(const std::string &) -> PairKind::Kind;

    /// Throws ParameterError unless n >= m >= 3 (n > m for pmcn).
    void validate(const PairKind &);

    struct Target
    {
        Shape shape;
        unsigned length;

        auto operator==(const Target &) const -> bool = default;
    };

    auto to_string(const Target &) -> std::string;

    /// "path:4", "cycle:3"
    auto parse_target(const std::string &) -> Target;

    auto red_target(const PairKind &) -> Target;
    auto blue_target(const PairKind &) -> Target;
    auto target_for(const PairKind &, Color) -> Target;

    /// Vertices [0,a) form A and [a,a+b) form B. Triples meeting B get touching_color,
    /// triples inside A the other colour.
    struct SplitSpec
    {
        unsigned a, b;
        Color touching_color = Color::red;

        auto vertices() const -> Vertex { return a + b; }
        auto operator==(const SplitSpec &) const -> bool = default;
    };

    /// The split colouring on R(p) - 1 vertices avoiding both targets of p. The
    /// shorter target gets the colour of the triples meeting B.
    auto lower_bound_params(const PairKind &) -> SplitSpec;

    auto build_split_coloring(const SplitSpec &) -> Coloring;
}

#endif
