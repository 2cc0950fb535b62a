#ifndef LOOSE_RAMSEY_EXTRACTOR_DETAIL_HH
#define LOOSE_RAMSEY_EXTRACTOR_DETAIL_HH 1

#include <loose_ramsey/extractor.hh>

#include <optional>
#include <string>
#include <vector>

namespace loose_ramsey::detail
{
    using Seq = std::vector<Vertex>;

    auto reversed(Seq s) -> Seq;
    auto contains(const Seq & s, Vertex v) -> bool;
    auto without(const Seq & s, const Seq & drop) -> Seq;
    auto join(const Seq & s) -> std::string;

    /// Distinct labels below universe, right parity, every edge in colour col.
    auto is_structure(const Coloring &, Color col, Shape, const Seq &, Vertex universe) -> bool;

    /// First replacement of one edge or two consecutive edges of P by a longer
    /// path of colour col through two vertices of W, endpoints kept.
    auto find_replacement(const Coloring &, Color col, const Seq & path, const Seq & reservoir) -> std::optional<Seq>;

    struct Extension
    {
        Seq assembly;
        unsigned edges_used;
        ConfigurationChoice choice;
    };

    /// Grows the lo-coloured assembly by one configuration on the window of path
    /// edges i, i+1 (and i+2 for the four-edge piece). The new piece starts at an
    /// end of the assembly, or at any fresh vertex when the assembly is empty, and
    /// ends at a fresh vertex. Bad configurations only with allow_bad.
    auto extend_once(const Coloring &, Color lo, const Seq & path, unsigned i, const Seq & assembly, const Seq & fresh,
            bool allow_bad) -> std::optional<Extension>;

    struct Chain
    {
        Seq assembly;
        unsigned consumed = 0;
        unsigned remaining = 0;
        Seq residual;
    };

    auto run_chain(const Coloring &, Color lo, const Seq & path, const Seq & reservoir,
            std::vector<std::string> * trace) -> Chain;
}

#endif
