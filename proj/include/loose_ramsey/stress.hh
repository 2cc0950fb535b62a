#ifndef LOOSE_RAMSEY_STRESS_HH
#define LOOSE_RAMSEY_STRESS_HH 1

#include <loose_ramsey/constructions.hh>
#include <loose_ramsey/extractor.hh>

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace loose_ramsey
{
    struct StressFailure
    {
        std::uint64_t offset;
        std::string reason;

        auto operator==(const StressFailure &) const -> bool = default;
    };

    struct StressReport
    {
        PairKind pair{PairKind::Kind::pp, 3, 3};
        Vertex n_vertices = 0;
        std::uint64_t trials = 0, seed = 0;
        std::uint64_t witnesses_verified = 0;
        std::vector<StressFailure> failures;    // sorted by offset
        std::uint64_t red_witnesses = 0;
        std::uint64_t search_fallbacks = 0;     // trials where a step ended in a plain search
        std::chrono::duration<double> wall_time{0};
    };

    /// LOOSE_RAMSEY_WORKERS, or 1 when unset or unparseable.
    auto workers_from_environment() -> unsigned;

    /// Trial t solves random_coloring(ramsey_number(p), seed + t) and checks the
    /// witness independently. workers == 0 reads the environment.
    auto stress(const PairKind &, std::uint64_t trials, std::uint64_t seed, unsigned workers = 0) -> StressReport;

    auto to_text(const StressReport &) -> std::string;
    auto to_json(const StressReport &) -> std::string;
}

#endif
