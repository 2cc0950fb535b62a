#ifndef LOOSE_RAMSEY_ORACLE_HH
#define LOOSE_RAMSEY_ORACLE_HH 1

#include <loose_ramsey/constructions.hh>
#include <loose_ramsey/hypergraph.hh>

#include <cstdint>
#include <optional>
#include <utility>

namespace loose_ramsey
{
    // Complete backtracking searches. Extension pairs are tried in lexicographic
    // order, so the result is the least vertex sequence the search order reaches.
    // universe restricts the search to labels below it (0 means every vertex).

    auto find_mono_path(const Coloring &, Color, unsigned length, Vertex universe = 0) -> std::optional<Witness>;

    /// Cycles are reported with the smallest link vertex first.
    auto find_mono_cycle(const Coloring &, Color, unsigned length, Vertex universe = 0) -> std::optional<Witness>;

    auto find_mono(const Coloring &, Color, const Target &, Vertex universe = 0) -> std::optional<Witness>;

    /// (0, nullopt) when the colour class is empty.
    auto longest_mono_path(const Coloring &, Color, Vertex universe = 0) -> std::pair<unsigned, std::optional<Witness>>;

    enum class EnumerationMode
    {
        find_one,
        count
    };

    struct EnumerationResult
    {
        std::optional<Coloring> avoiding;
        std::uint64_t count = 0;
        std::uint64_t examined = 0;
    };

    inline constexpr unsigned enumeration_bit_budget = 24;

    /// Walks every colouring of K^3_N with the red bitmap as loop counter. In find_one
    /// mode stops at the first colouring with neither a red red_target nor a blue
    /// blue_target; in count mode counts all of them. Throws ParameterError when
    /// C(N,3) exceeds the 24 bit budget.
    auto exhaustive_avoidance_search(Vertex n, const Target & red_target, const Target & blue_target,
            EnumerationMode mode) -> EnumerationResult;
}

#endif
