#ifndef LOOSE_RAMSEY_RANDOM_COLORING_HH
#define LOOSE_RAMSEY_RANDOM_COLORING_HH 1

#include <loose_ramsey/hypergraph.hh>

#include <cstdint>

namespace loose_ramsey
{
    /// Generator behind random_coloring. Its output sequence is fixed by the C++
    /// standard, so colourings are identical on every platform.
    inline constexpr const char * random_coloring_generator = "mt19937_64/top-bit/v1";

    /// Each triple independently red with probability 1/2: the top bit of one
    /// std::mt19937_64(seed) draw per triple, in colex order. Throws ParameterError for n < 3.
    auto random_coloring(Vertex n, std::uint64_t seed) -> Coloring;

    /// Same generator, red when a draw falls below red_probability * 2^64.
    auto biased_coloring(Vertex n, std::uint64_t seed, double red_probability) -> Coloring;
}

#endif
