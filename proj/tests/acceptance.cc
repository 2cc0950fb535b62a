// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <loose_ramsey/constructions.hh>
#include <loose_ramsey/extractor.hh>
#include <loose_ramsey/hypergraph.hh>
#include <loose_ramsey/oracle.hh>
#include <loose_ramsey/random_coloring.hh>
#include <loose_ramsey/stress.hh>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace loose_ramsey;
using K = PairKind::Kind;
using std::string;
using std::vector;

namespace
{
    using Clock = std::chrono::steady_clock;

    struct Outcome
    {
        bool ok = true;
        string detail;

        void fail(const string & why)
        {
            if (ok) detail = why;
            ok = false;
        }
    };

    auto all_pairs(unsigned max_n, bool strict_pmcn = true) -> vector<PairKind>
    {
        vector<PairKind> out;
        for (auto k : {K::pp, K::cc, K::pncm, K::pmcn})
            for (unsigned n = 3; n <= max_n; ++n)
                for (unsigned m = 3; m <= n; ++m)
                    if (k != K::pmcn || ! strict_pmcn || m < n)
                        out.push_back({k, n, m});
        return out;
    }

    auto target_ok(const PairKind & p, const Witness & w) -> bool
    {
        auto t = target_for(p, w.color);
        return witness_matches(w, w.color, t.shape, t.length);
    }

    auto ac1() -> Outcome
    {
        Outcome o;
        for (auto & p : all_pairs(12)) {
            Vertex want = p.kind == K::pp || p.kind == K::pncm ? 2 * p.n + (p.m + 1) / 2 : 2 * p.n + (p.m - 1) / 2;
            if (ramsey_number(p) != want)
                o.fail(to_string(p) + " gave " + std::to_string(ramsey_number(p)));
        }
        const std::pair<PairKind, Vertex> table[] = {{{K::pp, 3, 3}, 8}, {{K::pp, 4, 4}, 10}, {{K::cc, 3, 3}, 7},
            {{K::cc, 4, 4}, 9}, {{K::cc, 4, 3}, 9}, {{K::pmcn, 4, 3}, 9}, {{K::pp, 4, 3}, 10}};
        for (auto & [p, v] : table)
            if (ramsey_number(p) != v)
                o.fail(to_string(p) + " gave " + std::to_string(ramsey_number(p)));
        o.detail = o.ok ? "closed forms for n <= 12 and seven small values" : o.detail;
        return o;
    }

    auto ac2() -> Outcome
    {
        Outcome o;
        unsigned certified = 0;
        for (auto & p : all_pairs(6)) {
            auto c = build_split_coloring(lower_bound_params(p));
            if (c.size() + 1 != ramsey_number(p))
                o.fail(to_string(p) + " split has " + std::to_string(c.size()) + " vertices");
            else if (auto w = find_mono(c, Color::red, red_target(p)))
                o.fail(to_string(p) + " split holds " + to_string(*w));
            else if (auto w = find_mono(c, Color::blue, blue_target(p)))
                o.fail(to_string(p) + " split holds " + to_string(*w));
            else
                ++certified;
        }
        if (o.ok) o.detail = std::to_string(certified) + " split colourings avoid both targets";
        return o;
    }

    auto ac3() -> Outcome
    {
        Outcome o;
        Target c3{Shape::cycle, 3};
        auto r = exhaustive_avoidance_search(6, c3, c3, EnumerationMode::count);
        if (r.examined != (std::uint64_t{1} << 20))
            o.fail("examined " + std::to_string(r.examined));
        else if (r.count == 0 || ! r.avoiding)
            o.fail("no colouring of six vertices avoids both triangles");
        else if (find_mono_cycle(*r.avoiding, Color::red, 3) || find_mono_cycle(*r.avoiding, Color::blue, 3))
            o.fail("reported avoiding colouring holds a C3");
        else
            o.detail = std::to_string(r.count) + " of 2^20 colourings avoid red and blue C3";
        return o;
    }

    auto ac4() -> Outcome
    {
        Outcome o;
        unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        std::uint64_t verified = 0, fallbacks = 0;
        auto pairs = all_pairs(6);
        for (auto & p : pairs) {
            auto r = stress(p, 10000, 20261014, workers);
            verified += r.witnesses_verified;
            fallbacks += r.search_fallbacks;
            if (r.witnesses_verified != 10000 || ! r.failures.empty())
                o.fail(to_string(p) + ": " + std::to_string(r.failures.size()) + " failures, first " +
                        (r.failures.empty() ? string("-") : std::to_string(r.failures[0].offset) + " " + r.failures[0].reason));
        }
        if (o.ok)
            o.detail = std::to_string(verified) + " witnesses verified over " + std::to_string(pairs.size()) +
                " pairs, " + std::to_string(fallbacks) + " trials used a search fallback";
        return o;
    }

    // the split colouring plus one vertex whose triples follow extra(rank)
    auto extend(const Coloring & base, const std::function<Color(std::uint64_t)> & extra) -> Coloring
    {
        Coloring c(base.size() + 1);
        for (std::uint64_t r = 0; r < c.triples(); ++r)
            c.set_at_rank(r, r < base.triples() ? base.color_at_rank(r) : extra(r));
        return c;
    }

    auto ac5() -> Outcome
    {
        Outcome o;
        unsigned agreed = 0, adversarial = 0;
        for (auto & p : all_pairs(5)) {
            Vertex n = ramsey_number(p);
            for (std::uint64_t s = 0; s < 100; ++s) {
                auto c = random_coloring(n, 7000 + s);
                auto w = solve(p, c).witness;
                auto t = target_for(p, w.color);
                if (! verify_witness(c, w) || ! target_ok(p, w))
                    o.fail(to_string(p) + " seed " + std::to_string(7000 + s) + " bad witness " + to_string(w));
                else if (! find_mono(c, w.color, t))
                    o.fail(to_string(p) + " seed " + std::to_string(7000 + s) + " oracle disagrees");
                else
                    ++agreed;
            }

            auto base = build_split_coloring(lower_bound_params(p));
            vector<Coloring> cases;
            cases.push_back(extend(base, [](std::uint64_t) { return Color::red; }));
            cases.push_back(extend(base, [](std::uint64_t) { return Color::blue; }));
            for (std::uint64_t s = 0; s < 8; ++s) {
                std::mt19937_64 g(s);
                cases.push_back(extend(base, [&](std::uint64_t) { return (g() >> 63) ? Color::red : Color::blue; }));
            }
            auto count = cases.size();
            for (std::size_t i = 0; i < count; ++i)
                cases.push_back(cases[i].complement());
            std::mt19937_64 g(n);
            for (std::size_t i = 0; i < 2 * count; ++i) {
                vector<Vertex> perm(n);
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), g);
                cases.push_back(cases[i].relabeled(perm));
            }
            for (auto & c : cases) {
                try {
                    auto w = solve(p, c).witness;
                    if (! verify_witness(c, w) || ! target_ok(p, w))
                        o.fail(to_string(p) + " adversarial split: bad witness " + to_string(w));
                    else
                        ++adversarial;
                }
                catch (const std::exception & e) {
                    o.fail(to_string(p) + " adversarial split: " + e.what());
                }
            }
        }
        if (o.ok)
            o.detail = std::to_string(agreed) + " random agreements, " + std::to_string(adversarial) + " adversarial splits solved";
        return o;
    }

    auto ac6() -> Outcome
    {
        Outcome o;
        std::uint64_t triples = 0;
        for (Vertex n = 3; n <= 20; ++n) {
            std::uint64_t expect = 0;
            for (Vertex z = 2; z < n; ++z)
                for (Vertex y = 1; y < z; ++y)
                    for (Vertex x = 0; x < y; ++x) {
                        TripleEdge e{x, y, z};
                        if (colex_rank(e) != expect || colex_unrank(expect, n) != e)
                            o.fail("colex mismatch at " + to_string(e));
                        ++expect;
                    }
            if (expect != triple_count(n))
                o.fail("triple count at " + std::to_string(n));
            triples += expect;
        }

        std::mt19937_64 g(6);
        for (unsigned t = 0; t < 100000; ++t) {
            bool cycle = t % 2;
            unsigned len = std::uniform_int_distribution<unsigned>(cycle ? 3 : 1, 8)(g);
            vector<Vertex> labels(20);
            std::iota(labels.begin(), labels.end(), 0);
            std::shuffle(labels.begin(), labels.end(), g);
            labels.resize(cycle ? 2 * len : 2 * len + 1);
            vector<TripleEdge> edges;
            try {
                edges = cycle ? validate_loose_cycle(labels).edges() : validate_loose_path(labels).edges();
            }
            catch (const std::exception & e) {
                o.fail(string("valid structure rejected: ") + e.what());
                continue;
            }
            if (edges.size() != len || structure_length(cycle ? Shape::cycle : Shape::path, labels.size()) != len)
                o.fail("edge count");
            for (unsigned i = 0; i < len; ++i)
                for (unsigned j = i + 1; j < len; ++j) {
                    unsigned shared = 0;
                    for (auto v : {edges[j].a, edges[j].b, edges[j].c})
                        shared += edges[i].contains(v);
                    bool adjacent = j == i + 1 || (cycle && i == 0 && j == len - 1);
                    if (shared != (adjacent ? 1u : 0u))
                        o.fail("intersection pattern of edges " + std::to_string(i) + ", " + std::to_string(j));
                }
            // a repeated label is always refused
            auto broken = labels;
            broken.back() = broken.front();
            bool refused = false;
            try {
                cycle ? (void) validate_loose_cycle(broken) : (void) validate_loose_path(broken);
            }
            catch (const StructuralError &) {
                refused = true;
            }
            if (! refused)
                o.fail("repeated label accepted");
        }

        unsigned flips = 0;
        for (std::uint64_t s = 0; flips < 1000; ++s) {
            PairKind p{K::cc, 5, 4};
            auto c = random_coloring(ramsey_number(p), 90000 + s);
            auto w = solve(p, c).witness;
            auto edges = w.edges();
            auto on = edges[s % edges.size()];
            auto d = c;
            d.set(on, opposite(c.color(on)));
            if (verify_witness(d, w))
                o.fail("flip of a witness edge went unnoticed");
            // and a flip elsewhere changes nothing
            std::uint64_t r = (s * 7919) % c.triples();
            auto off = colex_unrank(r, c.size());
            if (std::find(edges.begin(), edges.end(), off) == edges.end()) {
                auto e = c;
                e.set(off, opposite(c.color(off)));
                if (! verify_witness(e, w))
                    o.fail("flip off the witness rejected it");
            }
            ++flips;
        }
        if (o.ok)
            o.detail = std::to_string(triples) + " triples round-tripped, 100000 structures, " + std::to_string(flips) + " flips";
        return o;
    }
}

auto main() -> int
{
    struct Criterion
    {
        const char * name;
        Outcome (*run)();
        double limit_seconds;
    };
    const Criterion criteria[] = {
        {"AC1", ac1, 1}, {"AC2", ac2, 600}, {"AC3", ac3, 300}, {"AC4", ac4, 1800}, {"AC5", ac5, 600}, {"AC6", ac6, 600}};

    bool all = true;
    for (auto & c : criteria) {
        auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        }
        catch (const std::exception & e) {
            o.fail(string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (secs > c.limit_seconds)
            o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        char time[32];
        std::snprintf(time, sizeof time, "%.2f", secs);
        std::cout << c.name << " " << (o.ok ? "PASS" : "FAIL") << " " << time << "s " << o.detail << std::endl;
        all = all && o.ok;
    }
    return all ? 0 : 1;
}
