#include <loose_ramsey/constructions.hh>
#include <loose_ramsey/extractor.hh>
#include <loose_ramsey/oracle.hh>
#include <loose_ramsey/random_coloring.hh>

#include <gtest/gtest.h>

#include <variant>

using namespace loose_ramsey;
using K = PairKind::Kind;
using Seq = std::vector<Vertex>;

namespace
{
    void paint(Coloring & c, Shape s, const Seq & v, Color col = Color::red)
    {
        for (auto & e : structure_edges(s, v))
            c.set(e, col);
    }

    auto choice_of(const std::variant<ConfigurationChoice, RedExtension> & r) -> ConfigurationChoice
    {
        if (auto * ch = std::get_if<ConfigurationChoice>(&r))
            return *ch;
        ADD_FAILURE() << "unexpected red extension " << to_string(std::get<RedExtension>(r).structure);
        return {};
    }

    auto witness_of(const std::variant<Witness, RedExtension> & r) -> Witness
    {
        if (auto * w = std::get_if<Witness>(&r))
            return *w;
        ADD_FAILURE() << "unexpected red extension " << to_string(std::get<RedExtension>(r).structure);
        return {};
    }

    auto seq(const Configuration & c) -> Seq { return {c.vertices.begin(), c.vertices.end()}; }
}

TEST(RamseyNumber, Values)
{
    EXPECT_EQ(ramsey_number({K::pp, 3, 3}), 8u);
    EXPECT_EQ(ramsey_number({K::pp, 4, 4}), 10u);
    EXPECT_EQ(ramsey_number({K::cc, 3, 3}), 7u);
    EXPECT_EQ(ramsey_number({K::cc, 4, 4}), 9u);
    EXPECT_EQ(ramsey_number({K::cc, 4, 3}), 9u);
    EXPECT_EQ(ramsey_number({K::pmcn, 4, 3}), 9u);
    EXPECT_EQ(ramsey_number({K::pncm, 5, 4}), 12u);
    EXPECT_THROW(ramsey_number({K::cc, 3, 4}), ParameterError);
}

TEST(Greedy, Examples)
{
    EXPECT_EQ(greedy_red_path(Coloring(9, Color::red)), (Seq{0, 1, 2, 3, 4, 5, 6, 7, 8}));
    EXPECT_TRUE(greedy_red_path(Coloring(9)).empty());
    EXPECT_EQ(greedy_red_path(build_split_coloring({7, 1})), (Seq{0, 1, 7, 2, 3}));
}

TEST(Greedy, CannotBeExtendedAtEitherEnd)
{
    for (std::uint64_t s = 0; s < 50; ++s) {
        auto c = biased_coloring(11, s, 0.4);
        auto p = greedy_red_path(c);
        ASSERT_FALSE(p.empty());
        ASSERT_TRUE(verify_witness(c, {Color::red, Shape::path, p}));
        for (Vertex x = 0; x < 11; ++x)
            for (Vertex y = 0; y < 11; ++y) {
                if (x == y || std::find(p.begin(), p.end(), x) != p.end() || std::find(p.begin(), p.end(), y) != p.end())
                    continue;
                EXPECT_FALSE(c.is(Color::red, p.front(), x, y));
                EXPECT_FALSE(c.is(Color::red, p.back(), x, y));
            }
    }
}

TEST(Maximalize, AbsorbsTwoReservoirVertices)
{
    Coloring c(9);
    paint(c, Shape::path, {0, 1, 2, 3, 4});
    c.set(TripleEdge::of(0, 5, 1), Color::red);
    c.set(TripleEdge::of(1, 6, 2), Color::red);
    ExtractionState st;
    st.structure = {0, 1, 2, 3, 4};
    st.reservoir = {5, 6, 7, 8};
    auto m = maximalize_wrt(c, st);
    EXPECT_EQ(m.structure, (Seq{0, 5, 1, 6, 2, 3, 4}));
    EXPECT_EQ(m.reservoir, (Seq{7, 8}));

    // already maximal: nothing changes
    Coloring d(9);
    paint(d, Shape::path, {0, 1, 2, 3, 4});
    auto same = maximalize_wrt(d, st);
    EXPECT_EQ(same.structure, st.structure);
    EXPECT_EQ(same.reservoir, st.reservoir);
}

TEST(Configuration, SpokeWhenEverythingElseBlue)
{
    Coloring c(8);
    paint(c, Shape::path, {0, 1, 2, 3, 4});
    ExtractionState st;
    st.structure = {0, 1, 2, 3, 4};
    st.reservoir = {5, 6, 7};
    auto ch = choice_of(find_configuration(c, st, 0));
    EXPECT_EQ(ch.arm, ConfigurationArm::spoke);
    EXPECT_TRUE(ch.primary.good);
    EXPECT_EQ(seq(ch.primary), (Seq{5, 1, 0, 2, 6}));
    EXPECT_TRUE(verify_witness(c, {Color::blue, Shape::path, seq(ch.primary)}));
}

// f1 = {v1, v3, y} red for every y, so the f2 arm {v1, v2, x} f2 applies
TEST(Configuration, SecondSpoke)
{
    Coloring c(8);
    paint(c, Shape::path, {0, 1, 2, 3, 4});
    for (Vertex y = 5; y < 8; ++y)
        c.set(TripleEdge::of(0, 2, y), Color::red);
    ExtractionState st;
    st.structure = {0, 1, 2, 3, 4};
    st.reservoir = {5, 6, 7};
    auto ch = choice_of(find_configuration(c, st, 0));
    EXPECT_EQ(ch.arm, ConfigurationArm::spoke);
    EXPECT_EQ(seq(ch.primary), (Seq{5, 0, 1, 2, 6}));
}

TEST(Configuration, LeftPairPrimary)
{
    Coloring c(8);
    paint(c, Shape::path, {0, 1, 2, 3, 4});
    c.set(TripleEdge::of(0, 1, 5), Color::red);
    ExtractionState st;
    st.structure = {0, 1, 2, 3, 4};
    st.reservoir = {5, 6, 7};
    auto ch = choice_of(find_configuration(c, st, 0));
    EXPECT_EQ(ch.arm, ConfigurationArm::left_pair_primary);
    EXPECT_EQ(ch.excluded_end, Vertex{5});
    // {x', v3, v2}{v2, v4, x''}
    EXPECT_EQ(seq(ch.primary), (Seq{5, 2, 1, 3, 6}));
    EXPECT_TRUE(verify_witness(c, {Color::blue, Shape::path, seq(ch.primary)}));
}

TEST(Configuration, BadPairWithSecondWindow)
{
    Coloring c(10);
    Seq p{0, 1, 2, 3, 4, 5, 6};
    paint(c, Shape::path, p);
    for (Vertex y = 7; y < 10; ++y)
        for (auto [a, b] : {std::pair{0, 2}, {1, 2}, {0, 3}, {1, 3}})
            c.set(TripleEdge::of(a, b, y), Color::red);
    ExtractionState st;
    st.structure = p;
    st.reservoir = {7, 8, 9};
    auto ch = choice_of(find_configuration(c, st, 0));
    EXPECT_EQ(ch.arm, ConfigurationArm::bad_pair);
    EXPECT_FALSE(ch.primary.good);
    ASSERT_TRUE(ch.secondary);
    // C1 = {v1, a, v2}{v2, v5, b}, C2 = {b, v4, v6}{v6, v3, z}
    EXPECT_EQ(seq(ch.primary), (Seq{7, 0, 1, 4, 8}));
    EXPECT_EQ(seq(*ch.secondary), (Seq{8, 3, 5, 2, 9}));
    for (auto v : ch.primary.inner())
        for (auto u : ch.secondary->inner())
            EXPECT_NE(u, v);
}

TEST(Chain, LengthMatchesReservoirUsed)
{
    Coloring c(12);
    Seq p{0, 1, 2, 3, 4, 5, 6, 7, 8};
    paint(c, Shape::path, p);
    ExtractionState st;
    st.structure = p;
    st.reservoir = {9, 10, 11};
    auto r = chain_blue_path(c, st);
    ASSERT_TRUE(std::holds_alternative<ExtractionState>(r));
    auto & out = std::get<ExtractionState>(r);
    EXPECT_EQ(out.assembly, (Seq{10, 2, 0, 1, 9, 5, 4, 6, 11}));
    EXPECT_EQ(out.consumed_edges, 4u);
    EXPECT_EQ(out.remaining_edges, 0u);
    EXPECT_TRUE(verify_witness(c, {Color::blue, Shape::path, out.assembly}));
}

TEST(Chain, PropertiesOnRandomMaximalPaths)
{
    unsigned chains = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        auto c = biased_coloring(16, s, 0.06);
        ExtractionState st;
        st.structure = greedy_red_path(c);
        if (st.structure.size() < 5) continue;
        for (Vertex v = 0; v < 16; ++v)
            if (std::find(st.structure.begin(), st.structure.end(), v) == st.structure.end())
                st.reservoir.push_back(v);
        st = maximalize_wrt(c, st);
        if (st.reservoir.size() < 3) continue;
        auto r = chain_blue_path(c, st);
        if (! std::holds_alternative<ExtractionState>(r)) continue;
        auto & out = std::get<ExtractionState>(r);
        ++chains;
        unsigned used = 0;
        for (auto v : out.assembly)
            used += std::find(st.reservoir.begin(), st.reservoir.end(), v) != st.reservoir.end();
        EXPECT_EQ(out.assembly.size() - 1, 4 * (used - 1));
        EXPECT_TRUE(verify_witness(c, {Color::blue, Shape::path, out.assembly}));
        if (st.reservoir.size() - used >= 2) {
            EXPECT_LE(out.remaining_edges, 2u);
        }
    }
    EXPECT_GT(chains, 20u);
}

TEST(CycleStep, CaseThree)
{
    Coloring c(11);
    Seq cyc{0, 1, 2, 3, 4, 5, 6, 7};
    paint(c, Shape::cycle, cyc);
    auto w = witness_of(cycle_step({c, 11}, Color::red, cyc, 5, 4, Shape::cycle));
    EXPECT_EQ(w, (Witness{Color::blue, Shape::cycle, {8, 0, 1, 2, 9, 3, 4, 5}}));
}

TEST(CycleStep, CaseOneEvenSecondary)
{
    Coloring c(11);
    Seq cyc{0, 1, 2, 3, 4, 5, 6, 7};
    paint(c, Shape::cycle, cyc);
    c.set(TripleEdge::of(1, 2, 8), Color::red);
    auto w = witness_of(cycle_step({c, 11}, Color::red, cyc, 5, 4, Shape::cycle));
    // Q{y', v2, v1}{v1, z, x'}
    EXPECT_EQ(w, (Witness{Color::blue, Shape::cycle, {9, 3, 2, 4, 10, 1, 0, 8}}));
}

TEST(PathStep, Cases)
{
    Seq p{0, 1, 2, 3, 4, 5, 6, 7, 8};
    {
        Coloring c(12);
        paint(c, Shape::path, p);
        // Q{y, v1, u}
        EXPECT_EQ(witness_of(path_step({c, 12}, Color::red, p, 5, 3)),
                (Witness{Color::blue, Shape::path, {9, 3, 2, 4, 10, 0, 11}}));
        // {v1, u, y}Q{z, v2, v9}
        EXPECT_EQ(witness_of(path_step({c, 12}, Color::red, p, 5, 4)),
                (Witness{Color::blue, Shape::path, {0, 11, 9, 3, 2, 4, 10, 1, 8}}));
    }
    {
        Coloring c(13);
        paint(c, Shape::path, p);
        // Q{z, v2, v8}{v8, u, v}{v, v9, v1}
        EXPECT_EQ(witness_of(path_step({c, 13}, Color::red, p, 5, 5)),
                (Witness{Color::blue, Shape::path, {9, 3, 2, 4, 10, 1, 7, 12, 11, 8, 0}}));
    }
}

TEST(Solve, AllRed)
{
    for (auto p : {PairKind{K::pp, 5, 4}, PairKind{K::cc, 5, 5}, PairKind{K::pncm, 5, 3}, PairKind{K::pmcn, 5, 3}}) {
        Coloring c(ramsey_number(p), Color::red);
        auto w = solve(p, c).witness;
        EXPECT_EQ(w.color, Color::red) << to_string(p);
        EXPECT_TRUE(witness_matches(w, Color::red, red_target(p).shape, red_target(p).length));
    }
}

TEST(Solve, SmallPathPairAlwaysAnswers)
{
    PairKind p{K::pp, 3, 3};
    for (std::uint64_t s = 0; s < 200; ++s) {
        auto c = random_coloring(8, s);
        auto w = solve(p, c).witness;
        EXPECT_TRUE(verify_witness(c, w));
        EXPECT_TRUE(witness_matches(w, w.color, target_for(p, w.color).shape, target_for(p, w.color).length));
    }
}

TEST(Solve, BelowThresholdThrows)
{
    EXPECT_THROW(solve({K::cc, 5, 4}, Coloring(10)), ParameterError);
    EXPECT_THROW(solve({K::pp, 3, 3}, build_split_coloring(lower_bound_params({K::pp, 3, 3}))), ParameterError);
}

TEST(Solve, UsesPrefixOnly)
{
    PairKind p{K::cc, 4, 4};
    auto c = random_coloring(14, 9);
    auto w = solve(p, c).witness;
    for (auto v : w.vertices)
        EXPECT_LT(v, ramsey_number(p));
}

TEST(Solve, Deterministic)
{
    PairKind p{K::pp, 6, 5};
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto c = random_coloring(ramsey_number(p), s);
        auto a = solve(p, c, true), b = solve(p, c, true);
        EXPECT_EQ(a.witness, b.witness);
        EXPECT_EQ(a.trace, b.trace);
    }
}

TEST(Solve, TraceOnlyWhenAsked)
{
    PairKind p{K::cc, 5, 4};
    auto c = random_coloring(11, 1);
    EXPECT_TRUE(solve(p, c).trace.empty());
    EXPECT_FALSE(solve(p, c, true).trace.empty());
}

TEST(Solve, CycleCycleTenThousand)
{
    PairKind p{K::cc, 5, 4};
    for (std::uint64_t s = 0; s < 10000; ++s) {
        auto c = random_coloring(11, s);
        auto w = solve(p, c).witness;
        ASSERT_TRUE(verify_witness(c, w)) << "seed " << s;
        auto t = target_for(p, w.color);
        ASSERT_TRUE(witness_matches(w, w.color, t.shape, t.length)) << "seed " << s;
        // independent cross-check on a sample
        if (s % 500 == 0) {
            EXPECT_TRUE(find_mono(c, w.color, t, 11)) << "seed " << s;
        }
    }
}
