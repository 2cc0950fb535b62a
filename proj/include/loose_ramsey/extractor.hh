#ifndef LOOSE_RAMSEY_EXTRACTOR_HH
#define LOOSE_RAMSEY_EXTRACTOR_HH 1

#include <loose_ramsey/constructions.hh>
#include <loose_ramsey/hypergraph.hh>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace loose_ramsey
{
    /// PP and PnCm: 2n + floor((m+1)/2); CC and PmCn: 2n + floor((m-1)/2).
    auto ramsey_number(const PairKind &) -> Vertex;

    /// The extraction reached a state its proof says cannot occur. Carries the trace.
    class InvariantFailure : public std::logic_error
    {
    private:
        std::vector<std::string> _trace;

    public:
        InvariantFailure(const std::string & what, std::vector<std::string> trace) :
            std::logic_error(what), _trace(std::move(trace)) {}

        auto trace() const -> const std::vector<std::string> & { return _trace; }
    };

    /// A blue (more generally: secondary colour) two-edge path [x, p, q, r, y] with
    /// edges {x,p,q} and {q,r,y}; x and y lie in the reservoir, p, q, r on two
    /// consecutive edges of the primary path.
    struct Configuration
    {
        std::array<Vertex, 5> vertices;
        bool good;

        auto link() const -> Vertex { return vertices[2]; }
        auto inner() const -> std::array<Vertex, 3> { return {vertices[1], vertices[2], vertices[3]}; }
        auto ends() const -> std::array<Vertex, 2> { return {vertices[0], vertices[4]}; }
        auto edge1() const -> TripleEdge { return TripleEdge::of(vertices[0], vertices[1], vertices[2]); }
        auto edge2() const -> TripleEdge { return TripleEdge::of(vertices[2], vertices[3], vertices[4]); }
    };

    /// Which branch of the configuration case analysis applied.
    enum class ConfigurationArm
    {
        left_pair_primary,  // some {v_{2i-1}, v_{2i}, x} has the primary colour
        right_pair_primary, // some {v_{2i+2}, v_{2i+3}, x} has the primary colour
        spoke,              // one of the four spokes {.,.,y} has the secondary colour
        bad_pair,           // all spokes primary: bad C1, and C2 when e_{i+2} exists
        window_search       // none of the above fitted the end constraints
    };

    auto to_string(ConfigurationArm) -> std::string;

    struct ConfigurationChoice
    {
        ConfigurationArm arm;
        Configuration primary;
        std::optional<Configuration> secondary;
        // the x of a pair arm. The proof cannot promise x as an end, but the
        // chosen ends are checked on actual colours, so x may still show up
        std::optional<Vertex> excluded_end;
    };

    /// Working set of the proof engine. structure is the primary-coloured loose path
    /// (vertex sequence), reservoir the set W it may grow into, assembly the
    /// secondary-coloured path Q built so far.
    struct ExtractionState
    {
        Color primary = Color::red;
        std::vector<Vertex> structure;
        std::vector<Vertex> reservoir;
        std::vector<Vertex> assembly;
        unsigned consumed_edges = 0;
        unsigned remaining_edges = 0;
        std::vector<Vertex> residual;
        std::vector<Vertex> forbidden_ends;
    };

    /// The engine met a primary-coloured edge where the argument needs the secondary
    /// colour, and this is the larger primary structure that results.
    struct RedExtension
    {
        Witness structure;
        std::string reason;
    };

    /// A red path that cannot be extended at either end by one red edge on two
    /// fresh vertices. Empty when there is no red edge.
    auto greedy_red_path(const Coloring &, Vertex universe = 0) -> std::vector<Vertex>;

    /// Applies one-edge and two-edge replacements that absorb two reservoir vertices
    /// until none is left.
    auto maximalize_wrt(const Coloring &, ExtractionState) -> ExtractionState;

    /// Configuration on edges i, i+1 (0-based) of a structure maximal w.r.t. its
    /// reservoir. Returns a RedExtension if an edge the argument needs in the
    /// secondary colour turns out primary.
    auto find_configuration(const Coloring &, const ExtractionState &, unsigned i)
        -> std::variant<ConfigurationChoice, RedExtension>;

    /// Chains configurations along the structure into the assembly Q. On return
    /// consumed_edges, remaining_edges (r) and residual (T) are filled in and
    /// |Q| = 2(|W'| - 1) with W' the reservoir vertices on Q.
    auto chain_blue_path(const Coloring &, ExtractionState) -> std::variant<ExtractionState, RedExtension>;

    struct ExtractionStats
    {
        unsigned oracle_base_cases = 0;
        unsigned secondary_constructions = 0;
        unsigned cycle_conversions = 0;
        unsigned red_extensions = 0;
        unsigned located_by_completion = 0;
        unsigned located_by_search = 0;
        unsigned proof_fallbacks = 0;
    };

    struct StepContext
    {
        const Coloring & coloring;
        Vertex universe;
        std::vector<std::string> * trace = nullptr;
        ExtractionStats * stats = nullptr;
    };

    /// Given a primary loose cycle of length n-1 on 2n + floor((m-1)/2) vertices,
    /// produce a secondary C_m (want == cycle) or P_m (want == path, n > m), or a
    /// primary C_n.
    auto cycle_step(const StepContext &, Color primary, const std::vector<Vertex> & cycle, unsigned n, unsigned m, Shape want)
        -> std::variant<Witness, RedExtension>;

    /// Given a primary loose path of length n-1 on 2n + floor((m+1)/2) vertices,
    /// produce a secondary P_m or a primary P_n / C_n.
    auto path_step(const StepContext &, Color primary, const std::vector<Vertex> & path, unsigned n, unsigned m)
        -> std::variant<Witness, RedExtension>;

    struct Extraction
    {
        Witness witness;
        std::vector<std::string> trace;
        ExtractionStats stats;
    };

    /// Runs the induction on the first ramsey_number(p) vertices of the colouring and
    /// returns a verified witness for one of the two targets of p.
    auto solve(const PairKind &, const Coloring &, bool keep_trace = false) -> Extraction;
}

#endif
