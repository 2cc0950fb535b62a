#include "extractor_detail.hh"

#include <algorithm>
#include <array>

using std::optional;
using std::string;
using std::vector;

namespace loose_ramsey
{
    using std::to_string;

    namespace detail
    {
        auto reversed(Seq s) -> Seq
        {
            std::reverse(s.begin(), s.end());
            return s;
        }

        auto contains(const Seq & s, Vertex v) -> bool
        {
            return std::find(s.begin(), s.end(), v) != s.end();
        }

        auto without(const Seq & s, const Seq & drop) -> Seq
        {
            Seq result;
            for (auto v : s)
                if (! contains(drop, v))
                    result.push_back(v);
            return result;
        }

        auto join(const Seq & s) -> string
        {
            string result;
            for (auto v : s) {
                if (! result.empty()) result += ' ';
                result += to_string(v);
            }
            return result;
        }

        auto is_structure(const Coloring & c, Color col, Shape shape, const Seq & s, Vertex universe) -> bool
        {
            if (shape == Shape::path ? (s.size() < 3 || s.size() % 2 == 0) : (s.size() < 6 || s.size() % 2 != 0))
                return false;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] >= universe) return false;
                for (std::size_t j = 0; j < i; ++j)
                    if (s[i] == s[j]) return false;
            }
            auto len = s.size() / 2;
            for (std::size_t i = 0; i < len; ++i)
                if (! c.is(col, s[2 * i], s[2 * i + 1], s[(2 * i + 2) % s.size()]))
                    return false;
            return true;
        }

        namespace
        {
            auto single_replacement(const Coloring & c, Color col, const Seq & p, unsigned i, Vertex x, Vertex y) -> optional<Seq>
            {
                Vertex s = p[2 * i], t = p[2 * i + 2];
                std::array<Vertex, 3> mid{p[2 * i + 1], x, y};
                for (unsigned qi = 0; qi < 3; ++qi)
                    for (unsigned pi = 0; pi < 3; ++pi) {
                        if (pi == qi) continue;
                        unsigned ri = 3 - qi - pi;
                        if (c.is(col, s, mid[pi], mid[qi]) && c.is(col, mid[qi], mid[ri], t)) {
                            Seq result(p.begin(), p.begin() + 2 * i + 1);
                            result.insert(result.end(), {mid[pi], mid[qi], mid[ri]});
                            result.insert(result.end(), p.begin() + 2 * i + 2, p.end());
                            return result;
                        }
                    }
                return std::nullopt;
            }

            auto double_replacement(const Coloring & c, Color col, const Seq & p, unsigned i, Vertex x, Vertex y) -> optional<Seq>
            {
                Vertex s = p[2 * i], t = p[2 * i + 4];
                std::array<Vertex, 5> mid{p[2 * i + 1], p[2 * i + 2], p[2 * i + 3], x, y};
                std::array<unsigned, 5> idx{0, 1, 2, 3, 4};
                // order: first link, first inner, second link, second inner, last inner
                do {
                    auto [p1, p2, p3, p4, p5] = std::array<Vertex, 5>{mid[idx[1]], mid[idx[0]], mid[idx[3]], mid[idx[2]], mid[idx[4]]};
                    if (c.is(col, s, p1, p2) && c.is(col, p2, p3, p4) && c.is(col, p4, p5, t)) {
                        Seq result(p.begin(), p.begin() + 2 * i + 1);
                        result.insert(result.end(), {p1, p2, p3, p4, p5});
                        result.insert(result.end(), p.begin() + 2 * i + 4, p.end());
                        return result;
                    }
                } while (std::next_permutation(idx.begin(), idx.end()));
                return std::nullopt;
            }
        }

        auto find_replacement(const Coloring & c, Color col, const Seq & path, const Seq & reservoir) -> optional<Seq>
        {
            if (path.size() < 3 || reservoir.size() < 2)
                return std::nullopt;
            auto len = static_cast<unsigned>(path.size() / 2);
            for (unsigned i = 0; i < len; ++i)
                for (std::size_t a = 0; a < reservoir.size(); ++a)
                    for (std::size_t b = a + 1; b < reservoir.size(); ++b) {
                        if (auto r = single_replacement(c, col, path, i, reservoir[a], reservoir[b]))
                            return r;
                        if (i + 1 < len)
                            if (auto r = double_replacement(c, col, path, i, reservoir[a], reservoir[b]))
                                return r;
                    }
            return std::nullopt;
        }

        namespace
        {
            struct Window
            {
                Vertex a, b, c, d, e;
                optional<Vertex> f, g;
            };

            class Extender
            {
            private:
                const Coloring & _c;
                Color _lo;
                const Seq & _assembly;
                Seq _joinable, _fresh;

            public:
                Extender(const Coloring & c, Color lo, const Seq & assembly, const Seq & fresh) :
                    _c(c), _lo(lo), _assembly(assembly), _fresh(fresh)
                {
                    if (assembly.empty())
                        _joinable = fresh;
                    else
                        _joinable = {assembly.front(), assembly.back()};
                }

                auto lo(Vertex x, Vertex y, Vertex z) const -> bool { return _c.is(_lo, x, y, z); }

                auto available() const -> Seq
                {
                    Seq all = _joinable;
                    for (auto v : _fresh)
                        if (! contains(all, v)) all.push_back(v);
                    return all;
                }

                auto attach(const Seq & piece) const -> Seq
                {
                    if (_assembly.empty())
                        return piece;
                    Seq q = _assembly.back() == piece.front() ? _assembly : reversed(_assembly);
                    q.insert(q.end(), piece.begin() + 1, piece.end());
                    return q;
                }

                // two-edge piece [s, p, q, r, t] in either orientation of its inner vertices
                auto pair_piece(Vertex p, Vertex q, Vertex r) const -> optional<Seq>
                {
                    for (auto s : _joinable)
                        for (auto t : _fresh) {
                            if (s == t) continue;
                            if (lo(s, p, q) && lo(q, r, t))
                                return Seq{s, p, q, r, t};
                            if (lo(s, r, q) && lo(q, p, t))
                                return Seq{s, r, q, p, t};
                        }
                    return std::nullopt;
                }

                // [s, a, b, e, y, d, f, c, z]: bad C1 followed by good C2
                auto quad_piece(const Window & w) const -> optional<Seq>
                {
                    for (auto s : _joinable) {
                        if (! lo(s, w.a, w.b)) continue;
                        for (auto y : _fresh) {
                            if (y == s || ! lo(w.b, w.e, y) || ! lo(y, w.d, *w.f)) continue;
                            for (auto z : _fresh)
                                if (z != s && z != y && lo(*w.f, w.c, z))
                                    return Seq{s, w.a, w.b, w.e, y, w.d, *w.f, w.c, z};
                        }
                    }
                    return std::nullopt;
                }
            };

            auto make_choice(ConfigurationArm arm, const Seq & piece, bool good) -> ConfigurationChoice
            {
                ConfigurationChoice choice{arm, Configuration{{piece[0], piece[1], piece[2], piece[3], piece[4]}, good}, std::nullopt, std::nullopt};
                if (piece.size() == 9)
                    choice.secondary = Configuration{{piece[4], piece[5], piece[6], piece[7], piece[8]}, true};
                return choice;
            }
        }

        auto extend_once(const Coloring & c, Color lo, const Seq & path, unsigned i, const Seq & assembly, const Seq & fresh,
                bool allow_bad) -> optional<Extension>
        {
            auto len = path.size() / 2;
            if (i + 2 > len || fresh.empty())
                return std::nullopt;

            Window w{path[2 * i], path[2 * i + 1], path[2 * i + 2], path[2 * i + 3], path[2 * i + 4], std::nullopt, std::nullopt};
            if (i + 3 <= len) {
                w.f = path[2 * i + 5];
                w.g = path[2 * i + 6];
            }

            Extender ext(c, lo, assembly, fresh);
            auto hi = opposite(lo);
            auto avail = ext.available();

            auto done = [&](ConfigurationArm arm, const Seq & piece, bool good) -> optional<Extension> {
                auto choice = make_choice(arm, piece, good);
                return Extension{ext.attach(piece), piece.size() == 9 ? 3u : 2u, choice};
            };

            optional<Vertex> left = std::nullopt, right = std::nullopt;
            for (auto x : avail) {
                if (! left && c.is(hi, w.a, w.b, x)) left = x;
                if (! right && c.is(hi, w.d, w.e, x)) right = x;
            }

            // the arms of the case analysis, then everything else on the window
            if (left)
                if (auto p = ext.pair_piece(w.c, w.b, w.d)) {
                    auto r = done(ConfigurationArm::left_pair_primary, *p, true);
                    r->choice.excluded_end = left;
                    return r;
                }
            if (right)
                if (auto p = ext.pair_piece(w.c, w.d, w.b)) {
                    auto r = done(ConfigurationArm::right_pair_primary, *p, true);
                    r->choice.excluded_end = right;
                    return r;
                }

            const std::array<std::array<Vertex, 3>, 4> spokes{{{w.b, w.a, w.c}, {w.a, w.b, w.c}, {w.b, w.a, w.d}, {w.a, w.b, w.d}}};
            for (auto & s : spokes)
                if (auto p = ext.pair_piece(s[0], s[1], s[2]))
                    return done(ConfigurationArm::spoke, *p, true);

            if (w.f)
                if (auto p = ext.quad_piece(w))
                    return done(ConfigurationArm::bad_pair, *p, false);

            const std::array<Vertex, 4> good_pool{w.a, w.b, w.c, w.d};
            for (auto q : good_pool)
                for (auto p : good_pool)
                    for (auto r : good_pool)
                        if (p != q && p != r && q != r && p < r)
                            if (auto piece = ext.pair_piece(p, q, r))
                                return done(ConfigurationArm::window_search, *piece, true);

            if (allow_bad) {
                if (auto p = ext.pair_piece(w.a, w.b, w.e))
                    return done(ConfigurationArm::bad_pair, *p, false);
                const std::array<Vertex, 4> bad_pool{w.a, w.b, w.c, w.e};
                for (auto q : bad_pool)
                    for (auto p : bad_pool)
                        for (auto r : bad_pool)
                            if (p != q && p != r && q != r && p < r)
                                if (auto piece = ext.pair_piece(p, q, r))
                                    return done(ConfigurationArm::window_search, *piece, false);
            }
            return std::nullopt;
        }

        auto run_chain(const Coloring & c, Color lo, const Seq & path, const Seq & reservoir, vector<string> * trace) -> Chain
        {
            Chain chain;
            Seq fresh = reservoir;
            auto len = static_cast<unsigned>(path.size() / 2);
            unsigned i = 0;
            unsigned reservoir_used = 0;
            while (auto ext = extend_once(c, lo, path, i, chain.assembly, fresh, false)) {
                if (trace)
                    trace->push_back("chain window e_" + to_string(i + 1) + ": " + to_string(ext->choice.arm) +
                            (ext->edges_used == 3 ? " (four-edge piece)" : "") + " -> " + join(ext->assembly));
                reservoir_used += (chain.assembly.empty() ? 1 : 0) + (ext->edges_used == 3 ? 2 : 1);
                chain.assembly = std::move(ext->assembly);
                fresh = without(fresh, chain.assembly);
                i += ext->edges_used;
            }
            chain.consumed = i;
            chain.remaining = len - i;
            chain.residual = fresh;

            if (! chain.assembly.empty() && chain.assembly.size() - 1 != 4 * (reservoir_used - 1))
                throw InvariantFailure("assembly of " + to_string(chain.assembly.size() / 2) + " edges through " +
                        to_string(reservoir_used) + " reservoir vertices", trace ? *trace : vector<string>{});
            return chain;
        }
    }

    using namespace detail;

    auto to_string(ConfigurationArm arm) -> string
    {
        switch (arm) {
            case ConfigurationArm::left_pair_primary: return "left pair primary";
            case ConfigurationArm::right_pair_primary: return "right pair primary";
            case ConfigurationArm::spoke: return "secondary spoke";
            case ConfigurationArm::bad_pair: return "bad pair";
            case ConfigurationArm::window_search: return "window search";
        }
        return "unknown";
    }

    auto ramsey_number(const PairKind & p) -> Vertex
    {
        validate(p);
        switch (p.kind) {
            case PairKind::Kind::pp:
            case PairKind::Kind::pncm:
                return 2 * p.n + (p.m + 1) / 2;
            case PairKind::Kind::cc:
            case PairKind::Kind::pmcn:
                return 2 * p.n + (p.m - 1) / 2;
        }
        throw ParameterError("unknown pair kind");
    }

    auto greedy_red_path(const Coloring & c, Vertex universe) -> vector<Vertex>
    {
        Vertex n = universe == 0 ? c.size() : std::min(universe, c.size());
        Seq path;
        for (std::uint64_t r = 0, t = triple_count(n); r < t && path.empty(); ++r)
            if (c.color_at_rank(r) == Color::red) {
                auto e = colex_unrank(r, n);
                path = {e.a, e.b, e.c};
            }
        if (path.empty())
            return path;

        auto grow_back = [&](Seq & p) {
            for (Vertex x = 0; x < n; ++x) {
                if (contains(p, x)) continue;
                for (Vertex y = 0; y < n; ++y)
                    if (y != x && ! contains(p, y) && c.is(Color::red, p.back(), x, y)) {
                        p.push_back(x);
                        p.push_back(y);
                        return true;
                    }
            }
            return false;
        };

        while (true) {
            if (grow_back(path))
                continue;
            std::reverse(path.begin(), path.end());
            bool grew = grow_back(path);
            std::reverse(path.begin(), path.end());
            if (! grew)
                break;
        }
        return path;
    }

    auto maximalize_wrt(const Coloring & c, ExtractionState st) -> ExtractionState
    {
        while (auto longer = find_replacement(c, st.primary, st.structure, st.reservoir)) {
            st.reservoir = without(st.reservoir, *longer);
            st.structure = std::move(*longer);
        }
        return st;
    }

    auto find_configuration(const Coloring & c, const ExtractionState & st, unsigned i)
        -> std::variant<ConfigurationChoice, RedExtension>
    {
        if (auto longer = find_replacement(c, st.primary, st.structure, st.reservoir))
            return RedExtension{Witness{st.primary, Shape::path, *longer}, "structure is not maximal w.r.t. its reservoir"};
        if (auto ext = extend_once(c, opposite(st.primary), st.structure, i, st.assembly, without(st.reservoir, st.forbidden_ends),
                    true))
            return ext->choice;
        throw InvariantFailure("no configuration on edges e_" + to_string(i + 1) + ", e_" + to_string(i + 2) +
                " of a maximal structure", {});
    }

    auto chain_blue_path(const Coloring & c, ExtractionState st) -> std::variant<ExtractionState, RedExtension>
    {
        if (auto longer = find_replacement(c, st.primary, st.structure, st.reservoir))
            return RedExtension{Witness{st.primary, Shape::path, *longer}, "structure is not maximal w.r.t. its reservoir"};
        auto chain = run_chain(c, opposite(st.primary), st.structure, st.reservoir, nullptr);
        st.assembly = std::move(chain.assembly);
        st.consumed_edges = chain.consumed;
        st.remaining_edges = chain.remaining;
        st.residual = std::move(chain.residual);
        return st;
    }
}
