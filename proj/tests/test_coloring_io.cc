#include <loose_ramsey/coloring_io.hh>
#include <loose_ramsey/random_coloring.hh>

#include <gtest/gtest.h>

#include <cstdio>

using namespace loose_ramsey;

TEST(Lrc1, BitOrder)
{
    EXPECT_EQ(to_lrc1(Coloring(3, Color::red)), "LRC1 3\n8\n");
    Coloring c(4);
    c.set_at_rank(1, Color::red);
    EXPECT_EQ(to_lrc1(c), "LRC1 4\n4\n");
    // 10 triples: ten ones then two padding zeros
    EXPECT_EQ(to_lrc1(Coloring(5, Color::red)), "LRC1 5\nffc\n");
}

TEST(Lre1, ListsRedTriplesInColexOrder)
{
    Coloring c(5);
    c.set(TripleEdge{2, 3, 4}, Color::red);
    c.set(TripleEdge{0, 1, 3}, Color::red);
    EXPECT_EQ(to_lre1(c), "LRE1 5\n0 1 3\n2 3 4\n");
}

TEST(Parse, RoundTripBothFormats)
{
    for (Vertex n : {3u, 4u, 7u, 12u, 20u})
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto c = random_coloring(n, seed);
            EXPECT_EQ(parse_coloring(to_lrc1(c)), c);
            EXPECT_EQ(parse_coloring(to_lre1(c)), c);
        }
    EXPECT_EQ(parse_coloring(to_lrc1(Coloring(0))), Coloring(0));
}

TEST(Parse, AcceptsWhitespaceAndUppercase)
{
    EXPECT_EQ(parse_coloring("LRC1 5\nF F\nC\n"), Coloring(5, Color::red));
    EXPECT_EQ(parse_coloring("LRE1 4\n  0 1 2\n\n1 2 3"), parse_coloring("LRC1 4\n9\n"));
}

TEST(Parse, Rejects)
{
    EXPECT_THROW(parse_coloring(""), FormatError);
    EXPECT_THROW(parse_coloring("LRC2 4\n0\n"), FormatError);
    EXPECT_THROW(parse_coloring("LRC1\n"), FormatError);
    EXPECT_THROW(parse_coloring("LRC1 4\n"), FormatError);
    EXPECT_THROW(parse_coloring("LRC1 4\n00\n"), FormatError);
    EXPECT_THROW(parse_coloring("LRC1 4\ng\n"), FormatError);
    EXPECT_THROW(parse_coloring("LRC1 5\nffe\n"), FormatError);
    EXPECT_THROW(parse_coloring("LRE1 4\n0 1 4\n"), FormatError);
    EXPECT_THROW(parse_coloring("LRE1 4\n0 1 1\n"), FormatError);
    EXPECT_THROW(parse_coloring("LRE1 4\n0 1\n"), FormatError);
    EXPECT_THROW(parse_coloring("LRE1 4\n0 1 x\n"), FormatError);
}

TEST(Files, WriteThenRead)
{
    auto path = testing::TempDir() + "colouring.lrc1";
    auto c = random_coloring(9, 42);
    write_text_file(path, to_lrc1(c));
    EXPECT_EQ(read_coloring_file(path), c);
    std::remove(path.c_str());
    EXPECT_THROW(read_coloring_file(path), FormatError);
}
