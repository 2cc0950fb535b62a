#include <loose_ramsey/coloring_io.hh>

#include <cctype>
#include <fstream>
#include <sstream>

using std::string;

namespace loose_ramsey
{
    using std::to_string;

    namespace
    {
        constexpr char hex_digits[] = "0123456789abcdef";

        auto hex_value(char ch) -> int
        {
            if (ch >= '0' && ch <= '9') return ch - '0';
            if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
            if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
            return -1;
        }

        auto parse_vertex_count(std::istringstream & in, const string & tag) -> Vertex
        {
            long long n;
            if (! (in >> n) || n < 0 || n > 1 << 20)
                throw FormatError(tag + " header needs a vertex count");
            return static_cast<Vertex>(n);
        }

        auto parse_lrc1(std::istringstream & in) -> Coloring
        {
            Coloring c(parse_vertex_count(in, "LRC1"));
            auto digits_needed = (c.triples() + 3) / 4;
            std::uint64_t digit = 0;
            char ch;
            while (in.get(ch)) {
                if (std::isspace(static_cast<unsigned char>(ch)))
                    continue;
                int value = hex_value(ch);
                if (value < 0)
                    throw FormatError(string("invalid hex digit '") + ch + "'");
                if (digit >= digits_needed)
                    throw FormatError("too many hex digits, expected " + to_string(digits_needed));
                for (int bit = 0; bit < 4; ++bit) {
                    auto rank = digit * 4 + bit;
                    bool red = (value >> (3 - bit)) & 1;
                    if (rank < c.triples())
                        c.set_at_rank(rank, red ? Color::red : Color::blue);
                    else if (red)
                        throw FormatError("padding bits must be zero");
                }
                ++digit;
            }
            if (digit != digits_needed)
                throw FormatError("expected " + to_string(digits_needed) + " hex digits, got " + to_string(digit));
            return c;
        }

        auto parse_lre1(std::istringstream & in) -> Coloring
        {
            Coloring c(parse_vertex_count(in, "LRE1"));
            long long a, b, d;
            while (in >> a) {
                if (! (in >> b >> d))
                    throw FormatError("truncated triple line");
                if (a < 0 || b < 0 || d < 0 || a >= c.size() || b >= c.size() || d >= c.size())
                    throw FormatError("triple label outside vertex range");
                try {
                    c.set(TripleEdge::of(Vertex(a), Vertex(b), Vertex(d)), Color::red);
                }
                catch (const StructuralError & e) {
                    throw FormatError(e.what());
                }
            }
            if (! in.eof())
                throw FormatError("unparseable triple line");
            return c;
        }
    }

    auto to_lrc1(const Coloring & c) -> string
    {
        string result = "LRC1 " + to_string(c.size()) + "\n";
        auto digits = (c.triples() + 3) / 4;
        result.reserve(result.size() + digits + 1);
        for (std::uint64_t d = 0; d < digits; ++d) {
            int value = 0;
            for (int bit = 0; bit < 4; ++bit) {
                auto rank = d * 4 + bit;
                if (rank < c.triples() && c.color_at_rank(rank) == Color::red)
                    value |= 1 << (3 - bit);
            }
            result += hex_digits[value];
        }
        result += "\n";
        return result;
    }

    auto to_lre1(const Coloring & c) -> string
    {
        string result = "LRE1 " + to_string(c.size()) + "\n";
        for (std::uint64_t r = 0, t = c.triples(); r < t; ++r)
            if (c.color_at_rank(r) == Color::red) {
                auto e = colex_unrank(r, c.size());
                result += to_string(e.a) + " " + to_string(e.b) + " " + to_string(e.c) + "\n";
            }
        return result;
    }

    auto parse_coloring(const string & text) -> Coloring
    {
        std::istringstream in(text);
        string tag;
        if (! (in >> tag))
            throw FormatError("empty colouring file");
        if (tag == "LRC1")
            return parse_lrc1(in);
        if (tag == "LRE1")
            return parse_lre1(in);
        throw FormatError("unknown colouring format tag '" + tag + "'");
    }

    auto read_coloring_file(const string & path) -> Coloring
    {
        std::ifstream in(path);
        if (! in)
            throw FormatError("cannot open " + path);
        std::ostringstream body;
        body << in.rdbuf();
        return parse_coloring(body.str());
    }

    void write_text_file(const string & path, const string & contents)
    {
        std::ofstream out(path);
        if (! (out << contents))
            throw FormatError("cannot write " + path);
    }
}
