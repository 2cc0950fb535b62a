#include <loose_ramsey/random_coloring.hh>
#include <loose_ramsey/stress.hh>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstdio>
#include <mutex>
#include <thread>

using std::string;

namespace loose_ramsey
{
    using std::to_string;

    auto workers_from_environment() -> unsigned
    {
        if (auto env = std::getenv("LOOSE_RAMSEY_WORKERS")) {
            char * end = nullptr;
            auto v = std::strtoul(env, &end, 10);
            if (end != env && *end == '\0' && v >= 1 && v <= 256)
                return static_cast<unsigned>(v);
        }
        return 1;
    }

    namespace
    {
        struct Outcome
        {
            bool verified = false;
            bool red = false;
            bool fallback = false;
            string reason;
        };

        auto run_trial(const PairKind & p, Vertex n, std::uint64_t seed) -> Outcome
        {
            Outcome o;
            try {
                auto c = random_coloring(n, seed);
                auto result = solve(p, c);
                auto & w = result.witness;
                // re-checked here rather than trusting solve
                auto t = target_for(p, w.color);
                if (! witness_matches(w, w.color, t.shape, t.length))
                    o.reason = "witness " + to_string(w) + " is not a target";
                else if (auto v = verify_witness(c, w); ! v)
                    o.reason = "witness " + to_string(w) + " rejected: " + v.reason;
                else {
                    o.verified = true;
                    o.red = w.color == Color::red;
                    o.fallback = result.stats.proof_fallbacks > 0;
                }
            }
            catch (const std::exception & e) {
                o.reason = e.what();
            }
            return o;
        }
    }

    auto stress(const PairKind & p, std::uint64_t trials, std::uint64_t seed, unsigned workers) -> StressReport
    {
        validate(p);
        if (trials < 1)
            throw ParameterError("stress needs at least one trial");
        if (workers == 0)
            workers = workers_from_environment();
        workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

        StressReport report;
        report.pair = p;
        report.n_vertices = ramsey_number(p);
        report.trials = trials;
        report.seed = seed;
        auto start = std::chrono::steady_clock::now();

        std::atomic<std::uint64_t> next{0};
        std::mutex merge;
        auto work = [&]() {
            StressReport local;
            for (std::uint64_t t; (t = next.fetch_add(1)) < trials;) {
                auto o = run_trial(p, report.n_vertices, seed + t);
                if (o.verified) {
                    ++local.witnesses_verified;
                    local.red_witnesses += o.red;
                    local.search_fallbacks += o.fallback;
                }
                else
                    local.failures.push_back({t, o.reason});
            }
            std::lock_guard lock(merge);
            report.witnesses_verified += local.witnesses_verified;
            report.red_witnesses += local.red_witnesses;
            report.search_fallbacks += local.search_fallbacks;
            report.failures.insert(report.failures.end(), local.failures.begin(), local.failures.end());
        };

        if (workers <= 1)
            work();
        else {
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < workers; ++i)
                pool.emplace_back(work);
            for (auto & t : pool)
                t.join();
        }

        std::sort(report.failures.begin(), report.failures.end(),
                [](const StressFailure & a, const StressFailure & b) { return a.offset < b.offset; });
        report.wall_time = std::chrono::steady_clock::now() - start;
        return report;
    }

    auto to_text(const StressReport & r) -> string
    {
        char seconds[32];
        std::snprintf(seconds, sizeof seconds, "%.3f", r.wall_time.count());
        string out;
        out += "pair " + to_string(r.pair) + "\n";
        out += "vertices " + to_string(r.n_vertices) + "\n";
        out += "generator " + string(random_coloring_generator) + "\n";
        out += "seed " + to_string(r.seed) + "\n";
        out += "trials " + to_string(r.trials) + "\n";
        out += "verified " + to_string(r.witnesses_verified) + "\n";
        out += "red " + to_string(r.red_witnesses) + "\n";
        out += "blue " + to_string(r.witnesses_verified - r.red_witnesses) + "\n";
        out += "search_fallbacks " + to_string(r.search_fallbacks) + "\n";
        out += "failures " + to_string(r.failures.size()) + "\n";
        for (auto & f : r.failures)
            out += "failure " + to_string(f.offset) + " " + f.reason + "\n";
        out += "wall_time " + string(seconds) + "\n";
        return out;
    }

    auto to_json(const StressReport & r) -> string
    {
        nlohmann::ordered_json j;
        j["pair"] = {{"kind", to_string(r.pair.kind)}, {"n", r.pair.n}, {"m", r.pair.m}};
        j["vertices"] = r.n_vertices;
        j["generator"] = random_coloring_generator;
        j["seed"] = r.seed;
        j["trials"] = r.trials;
        j["verified"] = r.witnesses_verified;
        j["red"] = r.red_witnesses;
        j["blue"] = r.witnesses_verified - r.red_witnesses;
        j["search_fallbacks"] = r.search_fallbacks;
        j["failures"] = nlohmann::ordered_json::array();
        for (auto & f : r.failures)
            j["failures"].push_back({{"offset", f.offset}, {"reason", f.reason}});
        j["wall_time"] = r.wall_time.count();
        return j.dump(2) + "\n";
    }
}
