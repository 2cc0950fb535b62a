#include <loose_ramsey/random_coloring.hh>

#include <cmath>
#include <random>

namespace loose_ramsey
{
    auto random_coloring(Vertex n, std::uint64_t seed) -> Coloring
    {
        if (n < 3)
            throw ParameterError("random colouring needs at least 3 vertices");
        std::mt19937_64 gen(seed);
        Coloring c(n);
        for (std::uint64_t r = 0, t = c.triples(); r < t; ++r)
            if (gen() >> 63)
                c.set_at_rank(r, Color::red);
        return c;
    }

    auto biased_coloring(Vertex n, std::uint64_t seed, double red_probability) -> Coloring
    {
        if (n < 3)
            throw ParameterError("random colouring needs at least 3 vertices");
        if (! (red_probability >= 0.0 && red_probability <= 1.0))
            throw ParameterError("red probability must lie in [0,1]");
        std::mt19937_64 gen(seed);
        Coloring c(n);
        // compare against a 64 bit threshold so the result is exact and portable
        auto threshold = red_probability >= 1.0 ? ~std::uint64_t{0}
                                                : static_cast<std::uint64_t>(std::ldexp(red_probability, 64));
        for (std::uint64_t r = 0, t = c.triples(); r < t; ++r) {
            auto draw = gen();
            if (draw < threshold || red_probability >= 1.0)
                c.set_at_rank(r, Color::red);
        }
        return c;
    }
}
