#include <loose_ramsey/constructions.hh>

#include <sstream>

using std::string;

namespace loose_ramsey
{
    using std::to_string;

    auto to_string(PairKind::Kind k) -> string
    {
        switch (k) {
            case PairKind::Kind::pp: return "pp";
            case PairKind::Kind::cc: return "cc";
            case PairKind::Kind::pncm: return "pncm";
            case PairKind::Kind::pmcn: return "pmcn";
        }
        return "?";
    }

    auto to_string(const PairKind & p) -> string
    {
        return to_string(p.kind) + "(n=" + to_string(p.n) + ",m=" + to_string(p.m) + ")";
    }

    auto parse_pair_kind(const string & s) -> PairKind::Kind
    {
        if (s == "pp") return PairKind::Kind::pp;
        if (s == "cc") return PairKind::Kind::cc;
        if (s == "pncm") return PairKind::Kind::pncm;
        if (s == "pmcn") return PairKind::Kind::pmcn;
        throw ParameterError("unknown pair kind '" + s + "' (expected pp, cc, pncm or pmcn)");
    }

    void validate(const PairKind & p)
    {
        if (p.m < 3)
            throw ParameterError("m must be at least 3 in " + to_string(p));
        if (p.n < p.m)
            throw ParameterError("n must be at least m in " + to_string(p));
        if (p.kind == PairKind::Kind::pmcn && p.n == p.m)
            throw ParameterError("pmcn needs n > m, got " + to_string(p));
    }

    auto to_string(const Target & t) -> string
    {
        return to_string(t.shape) + ":" + to_string(t.length);
    }

    auto parse_target(const string & s) -> Target
    {
        auto colon = s.find(':');
        if (colon == string::npos)
            throw ParameterError("target must look like path:L or cycle:L, got '" + s + "'");
        auto shape = parse_shape(s.substr(0, colon));
        std::istringstream in(s.substr(colon + 1));
        unsigned length;
        if (! (in >> length) || ! in.eof())
            throw ParameterError("bad target length in '" + s + "'");
        if (length < (shape == Shape::cycle ? 3u : 1u))
            throw ParameterError("target length too small in '" + s + "'");
        return Target{shape, length};
    }

    auto red_target(const PairKind & p) -> Target
    {
        switch (p.kind) {
            case PairKind::Kind::pp: return {Shape::path, p.n};
            case PairKind::Kind::cc: return {Shape::cycle, p.n};
            case PairKind::Kind::pncm: return {Shape::path, p.n};
            case PairKind::Kind::pmcn: return {Shape::path, p.m};
        }
        throw ParameterError("bad pair kind");
    }

    auto blue_target(const PairKind & p) -> Target
    {
        switch (p.kind) {
            case PairKind::Kind::pp: return {Shape::path, p.m};
            case PairKind::Kind::cc: return {Shape::cycle, p.m};
            case PairKind::Kind::pncm: return {Shape::cycle, p.m};
            case PairKind::Kind::pmcn: return {Shape::cycle, p.n};
        }
        throw ParameterError("bad pair kind");
    }

    auto target_for(const PairKind & p, Color c) -> Target
    {
        return c == Color::red ? red_target(p) : blue_target(p);
    }

    auto lower_bound_params(const PairKind & p) -> SplitSpec
    {
        validate(p);
        switch (p.kind) {
            // long target confined to A needs 2n+1 vertices, short one meets B
            case PairKind::Kind::pp:
            case PairKind::Kind::pncm:
                return SplitSpec{2 * p.n, (p.m + 1) / 2 - 1, Color::blue};
            // long cycle needs 2n vertices
            case PairKind::Kind::cc:
                return SplitSpec{2 * p.n - 1, (p.m - 1) / 2, Color::blue};
            case PairKind::Kind::pmcn:
                return SplitSpec{2 * p.n - 1, (p.m - 1) / 2, Color::red};
        }
        throw ParameterError("bad pair kind");
    }

    auto build_split_coloring(const SplitSpec & s) -> Coloring
    {
        if (s.a < 3)
            throw ParameterError("part A needs at least 3 vertices");
        Coloring c(s.vertices(), s.touching_color);
        // ranks of triples inside A are exactly [0, C(a,3))
        for (std::uint64_t r = 0, t = triple_count(s.a); r < t; ++r)
            c.set_at_rank(r, opposite(s.touching_color));
        return c;
    }
}
