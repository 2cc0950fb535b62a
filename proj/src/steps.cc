#include "extractor_detail.hh"

#include <loose_ramsey/oracle.hh>

#include <algorithm>
#include <initializer_list>

using std::optional;
using std::string;
using std::variant;
using std::vector;

namespace loose_ramsey
{
    using std::to_string;
    using namespace detail;

    namespace
    {
        // node budget for each local completion search
        constexpr unsigned completion_budget = 20000;

        auto cat(std::initializer_list<Seq> parts) -> Seq
        {
            Seq result;
            for (auto & p : parts)
                result.insert(result.end(), p.begin(), p.end());
            return result;
        }

        auto drop_back(const Seq & s, std::size_t k) -> Seq
        {
            return Seq(s.begin(), s.end() - std::min(k, s.size()));
        }

        auto drop_front(const Seq & s, std::size_t k) -> Seq
        {
            return Seq(s.begin() + std::min(k, s.size()), s.end());
        }

        class Engine
        {
        private:
            const Coloring & _c;
            Vertex _u;
            vector<string> * _trace;
            ExtractionStats _own;
            ExtractionStats * _stats;

            // close_to == universe means an open path
            auto grow(Color col, Seq & seq, vector<char> & used, unsigned k, Vertex close_to, unsigned & budget) -> bool
            {
                if (k == 0)
                    return true;
                if (budget == 0)
                    return false;
                --budget;
                Vertex last = seq.back();
                if (close_to < _u && k == 1) {
                    for (Vertex p = 0; p < _u; ++p)
                        if (! used[p] && _c.is(col, last, p, close_to)) {
                            seq.push_back(p);
                            used[p] = 1;
                            return true;
                        }
                    return false;
                }
                for (Vertex p = 0; p < _u; ++p) {
                    if (used[p]) continue;
                    for (Vertex q = 0; q < _u; ++q) {
                        if (q == p || used[q] || ! _c.is(col, last, p, q)) continue;
                        seq.push_back(p);
                        seq.push_back(q);
                        used[p] = used[q] = 1;
                        if (grow(col, seq, used, k - 1, close_to, budget))
                            return true;
                        used[p] = used[q] = 0;
                        seq.pop_back();
                        seq.pop_back();
                    }
                }
                return false;
            }

        public:
            explicit Engine(const StepContext & ctx) :
                _c(ctx.coloring),
                _u(ctx.universe == 0 ? ctx.coloring.size() : std::min(ctx.universe, ctx.coloring.size())),
                _trace(ctx.trace),
                _stats(ctx.stats ? ctx.stats : &_own)
            {
            }

            auto coloring() const -> const Coloring & { return _c; }
            auto universe() const -> Vertex { return _u; }
            auto tracing() const -> bool { return _trace != nullptr; }
            auto trace() const -> vector<string> * { return _trace; }
            auto stats() -> ExtractionStats & { return *_stats; }

            void note(const string & s)
            {
                if (_trace) _trace->push_back(s);
            }

            auto is(Color col, Vertex x, Vertex y, Vertex z) const -> bool { return _c.is(col, x, y, z); }

            auto outside(const Seq & used) const -> Seq
            {
                Seq result;
                for (Vertex v = 0; v < _u; ++v)
                    if (! contains(used, v)) result.push_back(v);
                return result;
            }

            auto emit(Color col, Shape shape, const Seq & s, unsigned length) const -> optional<Witness>
            {
                if (s.size() != (shape == Shape::path ? 2 * length + 1 : 2 * length))
                    return std::nullopt;
                if (! is_structure(_c, col, shape, s, _u))
                    return std::nullopt;
                return Witness{col, shape, s};
            }

            // Completes a structure of colour col by keeping most of a known col path
            // and adding a few edges through any other vertices.
            auto locate_near(Color col, const vector<Seq> & bases, Shape shape, unsigned length) -> optional<Witness>
            {
                for (auto & base : bases) {
                    unsigned len = static_cast<unsigned>(base.size() / 2);
                    for (unsigned d = 0; d <= 2; ++d)
                        for (unsigned s = 0; s <= d; ++s) {
                            unsigned t = d - s;
                            if (d >= len || len - d >= length) continue;
                            Seq core(base.begin() + 2 * s, base.end() - 2 * t);
                            unsigned k = length - (len - d);
                            for (int side = 0; side < (shape == Shape::path ? 2 : 1); ++side) {
                                Seq seq = side == 0 ? core : reversed(core);
                                vector<char> used(_u, 0);
                                for (auto v : seq) used[v] = 1;
                                unsigned budget = completion_budget;
                                Vertex close_to = shape == Shape::cycle ? seq.front() : _u;
                                if (grow(col, seq, used, k, close_to, budget))
                                    if (auto w = emit(col, shape, seq, length))
                                        return w;
                            }
                        }
                }
                return std::nullopt;
            }

            [[noreturn]] void fail(const string & what)
            {
                throw InvariantFailure(what, _trace ? *_trace : vector<string>{});
            }
        };

        auto reflect(const Seq & cycle) -> Seq
        {
            Seq result{cycle[0]};
            for (std::size_t k = cycle.size() - 1; k >= 1; --k)
                result.push_back(cycle[k]);
            return result;
        }

        class CycleStep
        {
        private:
            Engine & _e;
            Color _hi, _lo;
            const Seq & _cycle;
            unsigned _n, _m;
            Shape _want;
            Seq _w;
            Seq _cv;

            // 1-based cyclic index into the current orientation
            auto v(long k) const -> Vertex
            {
                long s = static_cast<long>(_cv.size());
                return _cv[static_cast<std::size_t>(((k - 1) % s + s) % s)];
            }

            auto segment(long from, long count) const -> Seq
            {
                Seq result;
                for (long k = 0; k < count; ++k)
                    result.push_back(v(from + k));
                return result;
            }

            auto length() const -> long { return static_cast<long>(_cv.size() / 2); }

            auto primary_cycle(const Seq & s, const string & why) -> optional<RedExtension>
            {
                if (auto w = _e.emit(_hi, Shape::cycle, s, _n)) {
                    ++_e.stats().red_extensions;
                    _e.note(to_string(_hi) + " C_" + to_string(_n) + " from " + why);
                    return RedExtension{*w, why};
                }
                return std::nullopt;
            }

            auto first_valid(const vector<Seq> & candidates, const string & label) -> optional<Witness>
            {
                for (auto & s : candidates)
                    if (auto w = _e.emit(_lo, _want, s, _m)) {
                        ++_e.stats().secondary_constructions;
                        _e.note(label + " -> " + to_string(*w));
                        return w;
                    }
                return std::nullopt;
            }

            // 3-edge segment of the cycle starting at v(from), replaced w.r.t. hat_w
            auto segment_replacement(long from, const Seq & hat_w) -> optional<RedExtension>
            {
                auto hat = segment(from, 7);
                if (auto rep = find_replacement(_e.coloring(), _hi, hat, hat_w))
                    return primary_cycle(cat({*rep, segment(from + 7, 2 * length() - 7)}), "segment replacement");
                return std::nullopt;
            }

            auto case_one(long i, Vertex z) -> optional<variant<Witness, RedExtension>>
            {
                auto path = segment(2 * i + 1, 2 * length() - 1);
                auto w0 = without(_w, {z});

                if (auto rep = find_replacement(_e.coloring(), _hi, path, w0))
                    if (auto r = primary_cycle(cat({*rep, {v(2 * i)}}), "replacement on the opened cycle"))
                        return *r;

                auto chain = run_chain(_e.coloring(), _lo, path, w0, _e.trace());
                auto x = chain.residual.size();
                const Seq & q = chain.assembly;
                bool even = _m % 2 == 0;
                if (_e.tracing())
                    _e.note("subcase x=" + to_string(x) + ", m " + (even ? "even" : "odd") + ", r=" + to_string(chain.remaining));
                if (q.empty())
                    return std::nullopt;

                vector<Seq> cands;
                string label = "subcase x=" + to_string(x);
                const Seq qs[2] = {q, reversed(q)};

                if (x == 0) {
                    for (auto & qo : qs) {
                        if (_want == Shape::cycle && even)
                            cands.push_back(cat({qo, {v(2 * i), v(2 * i - 1), z}}));
                        else if (_want == Shape::cycle)
                            cands.push_back(cat({drop_back(qo, 4), {v(2 * i - 2), v(2 * i), qo.back(), v(2 * i - 1), z}}));
                        else if (even) {
                            cands.push_back(cat({{v(2 * i - 3), v(2 * i - 2)}, qo, {v(2 * i - 1), v(2 * i)}}));
                            cands.push_back(cat({qo, {v(2 * i - 1), v(2 * i), v(2 * i - 2), z}}));
                        }
                        else
                            cands.push_back(cat({qo, {v(2 * i - 1), v(2 * i)}}));
                    }
                    return wrap(first_valid(cands, label));
                }

                if (x != 1) {
                    _e.note("x=" + to_string(x) + " left over: the argument has no construction here");
                    return std::nullopt;
                }

                Vertex u = chain.residual[0];
                if (_want == Shape::cycle) {
                    for (auto & qo : qs) {
                        if (! even)
                            cands.push_back(cat({qo, {v(2 * i - 2), v(2 * i), u, v(2 * i - 1), z}}));
                        else {
                            Seq a = cat({qo, {v(2 * i - 3), v(2 * i - 4), v(2 * i - 2), u, v(2 * i), v(2 * i - 1), z}});
                            Seq b = cat({qo, {v(2 * i - 1), v(2 * i), v(2 * i - 2), u, z, v(2 * i - 5), v(2 * i - 4)}});
                            Seq c = cat({qo, {v(2 * i - 1), v(2 * i), v(2 * i - 2), u, v(2 * i - 3), v(2 * i - 4), v(2 * i - 5)}});
                            if (_e.is(_hi, v(2 * i - 5), v(2 * i - 4), qo.front()))
                                cands.insert(cands.end(), {a, b, c});
                            else if (_e.is(_hi, v(2 * i - 4), v(2 * i - 3), u))
                                cands.insert(cands.end(), {b, a, c});
                            else
                                cands.insert(cands.end(), {c, a, b});
                        }
                    }
                    return wrap(first_valid(cands, label));
                }

                // paths for x = 1 continue along a short segment of the cycle
                long from = even ? 2 * i - 7 : 2 * i - 5;
                Seq hat_w{q.front(), q.back(), u, z};
                if (auto r = segment_replacement(from, hat_w))
                    return *r;
                auto hat = segment(from, 7);
                auto ext = extend_once(_e.coloring(), _lo, hat, 0, q, {u, z}, false);
                if (! ext) {
                    _e.note("no configuration on the segment from v(" + to_string(from) + ")");
                    return std::nullopt;
                }
                const Seq & q2 = ext->assembly;
                _e.note("segment configuration: " + to_string(ext->choice.arm) + " -> " + join(q2));
                if (ext->edges_used == 3) {
                    cands.push_back(drop_back(q2, 2));
                    cands.push_back(drop_front(q2, 2));
                }
                else if (! even) {
                    cands.push_back(cat({{v(2 * i), v(2 * i - 1)}, q2}));
                    cands.push_back(cat({q2, {v(2 * i - 1), v(2 * i)}}));
                }
                else {
                    if (q2.back() == z)
                        cands.push_back(cat({{u, v(2 * i - 2), v(2 * i), v(2 * i - 1)}, q2}));
                    cands.push_back(cat({{v(2 * i - 3), v(2 * i - 2)}, q2, {v(2 * i - 1), v(2 * i)}}));
                    cands.push_back(cat({q2, {v(2 * i - 1), v(2 * i), v(2 * i - 2), z}}));
                    cands.push_back(cat({{u, v(2 * i - 2), v(2 * i), v(2 * i - 1)}, q2}));
                }
                return wrap(first_valid(cands, label + " (segment)"));
            }

            static auto wrap(optional<Witness> w) -> optional<variant<Witness, RedExtension>>
            {
                if (w) return variant<Witness, RedExtension>(std::move(*w));
                return std::nullopt;
            }

            // every cycle-to-reservoir edge over consecutive cycle vertices is lo
            auto case_three() -> optional<Witness>
            {
                vector<Seq> cands;
                long len = length();
                for (int orient = 0; orient < 2; ++orient) {
                    _cv = orient == 0 ? _cycle : reflect(_cycle);
                    for (long start = 1; start <= 2 * len; ++start) {
                        auto c = [&](long j) { return v(start + j - 1); };
                        Seq s;
                        std::size_t zi = 0, cj = 1;
                        auto z = [&]() -> optional<Vertex> { return zi < _w.size() ? optional<Vertex>(_w[zi++]) : std::nullopt; };
                        bool short_w = false;
                        auto push_z = [&]() { if (auto x = z()) s.push_back(*x); else short_w = true; };
                        if (_want == Shape::path || _m % 2 == 0) {
                            std::size_t target = _want == Shape::path ? 2 * _m + 1 : 2 * _m;
                            while (s.size() < target && ! short_w) {
                                if (s.size() % 4 == 0)
                                    push_z();
                                else
                                    s.push_back(c(static_cast<long>(cj++)));
                            }
                        }
                        else {
                            push_z();
                            s.insert(s.end(), {c(1), c(2)});
                            push_z();
                            s.insert(s.end(), {c(3), c(4)});
                            cj = 5;
                            while (s.size() < 2 * _m && ! short_w) {
                                push_z();
                                for (int k = 0; k < 3; ++k) s.push_back(c(static_cast<long>(cj++)));
                            }
                        }
                        if (! short_w)
                            cands.push_back(std::move(s));
                    }
                }
                _cv = _cycle;
                return first_valid(cands, "case 3 construction");
            }

        public:
            CycleStep(Engine & e, Color hi, const Seq & cycle, unsigned n, unsigned m, Shape want) :
                _e(e), _hi(hi), _lo(opposite(hi)), _cycle(cycle), _n(n), _m(m), _want(want), _w(e.outside(cycle)), _cv(cycle)
            {
            }

            auto run() -> variant<Witness, RedExtension>
            {
                long len = length();
                bool any_primary = false;
                for (int orient = 0; orient < 2; ++orient) {
                    for (long i = 1; i <= len; ++i)
                        for (auto z : _w) {
                            _cv = orient == 0 ? _cycle : reflect(_cycle);
                            if (! _e.is(_hi, v(2 * i), v(2 * i + 1), z))
                                continue;
                            any_primary = true;
                            if (_e.tracing())
                                _e.note("cycle step case " + to_string(orient + 1) + " at e_" + to_string(i) + " with z=" + to_string(z));
                            if (auto r = case_one(i, z))
                                return *r;
                        }
                }
                if (! any_primary)
                    _e.note("cycle step case 3");
                if (auto w = case_three())
                    return *w;

                vector<Seq> openings;
                for (long i = 1; i <= len; ++i)
                    openings.push_back(segment(2 * i + 1, 2 * len - 1));
                if (auto w = _e.locate_near(_hi, openings, Shape::cycle, _n)) {
                    ++_e.stats().located_by_completion;
                    _e.note("constructions failed on a primary edge; completed " + to_string(*w));
                    return RedExtension{*w, "local completion"};
                }
                if (auto w = find_mono_cycle(_e.coloring(), _hi, _n, _e.universe())) {
                    ++_e.stats().located_by_search;
                    _e.note("constructions failed on a primary edge; search found " + to_string(*w));
                    return RedExtension{*w, "search"};
                }
                Target target{_want, _m};
                if (auto w = find_mono(_e.coloring(), _lo, target, _e.universe())) {
                    ++_e.stats().proof_fallbacks;
                    _e.note("cycle step fell back to search: " + to_string(*w));
                    return *w;
                }
                _e.fail("cycle step found neither colour's target");
            }
        };

        class PathStep
        {
        private:
            Engine & _e;
            Color _hi, _lo;
            const Seq & _p;
            unsigned _n, _m;

            auto v(std::size_t k) const -> Vertex { return _p[k - 1]; }

            auto primary(Shape shape, const Seq & s, const string & why) -> optional<RedExtension>
            {
                if (auto w = _e.emit(_hi, shape, s, _n)) {
                    ++_e.stats().red_extensions;
                    _e.note(to_string(_hi) + " " + to_string(shape) + " of length " + to_string(_n) + " from " + why);
                    return RedExtension{*w, why};
                }
                return std::nullopt;
            }

            auto first_valid(const vector<Seq> & candidates, const string & label) -> optional<Witness>
            {
                for (auto & s : candidates)
                    if (auto w = _e.emit(_lo, Shape::path, s, _m)) {
                        ++_e.stats().secondary_constructions;
                        _e.note(label + " -> " + to_string(*w));
                        return w;
                    }
                return std::nullopt;
            }

            auto attempt() -> optional<variant<Witness, RedExtension>>
            {
                auto wbar = _e.outside(_p);
                Vertex u = wbar.back();
                auto w0 = drop_back(wbar, 1);
                Seq tail(_p.begin() + 2, _p.end());
                std::size_t last = _p.size();

                if (auto rep = find_replacement(_e.coloring(), _hi, tail, w0))
                    if (auto r = primary(Shape::path, cat({{v(1), v(2)}, *rep}), "replacement on P minus e_1"))
                        return *r;

                auto chain = run_chain(_e.coloring(), _lo, tail, w0, _e.trace());
                auto x = chain.residual.size();
                const Seq & q = chain.assembly;
                bool even = _m % 2 == 0;
                if (_e.tracing())
                    _e.note("path step u=" + to_string(u) + ", x=" + to_string(x) + ", m " + (even ? "even" : "odd") +
                            ", r=" + to_string(chain.remaining));
                if (q.empty())
                    return std::nullopt;

                vector<Seq> cands;
                const Seq qs[2] = {q, reversed(q)};
                if (x == 0) {
                    for (auto & qo : qs)
                        cands.push_back(even ? cat({{v(1), u}, qo, {v(2), v(last)}}) : cat({qo, {v(1), u}}));
                    if (auto w = first_valid(cands, "case x=0"))
                        return *w;
                    return std::nullopt;
                }
                if (x != 1) {
                    _e.note("x=" + to_string(x) + " left over: the argument has no construction here");
                    return std::nullopt;
                }

                Vertex t = chain.residual[0];
                if (! even) {
                    for (auto & qo : qs)
                        cands.push_back(cat({qo, {v(2), v(last - 1), u, t, v(last), v(1)}}));
                    if (auto w = first_valid(cands, "case x=1"))
                        return *w;
                    return std::nullopt;
                }

                Seq hat(_p.end() - 5, _p.end());
                Seq hat_w{q.front(), q.back(), u, t};
                if (auto rep = find_replacement(_e.coloring(), _hi, hat, hat_w))
                    if (auto r = primary(Shape::path, cat({drop_back(_p, 5), *rep}), "replacement on the last two edges"))
                        return *r;
                auto ext = extend_once(_e.coloring(), _lo, hat, 0, q, {u, t}, true);
                if (! ext) {
                    _e.note("no configuration on the last two edges");
                    return std::nullopt;
                }
                const Seq & q2 = ext->assembly;
                _e.note("closing configuration: " + to_string(ext->choice.arm) + " -> " + join(q2));
                Vertex other = q2.back() == u ? t : u;
                for (Vertex w : {v(last - 1), v(last)})
                    if (! contains(q2, w))
                        cands.push_back(cat({{other, v(1)}, q2, {w, v(2)}}));
                if (auto w = first_valid(cands, "case x=1"))
                    return *w;
                return std::nullopt;
            }

        public:
            PathStep(Engine & e, Color hi, const Seq & p, unsigned n, unsigned m) :
                _e(e), _hi(hi), _lo(opposite(hi)), _p(p), _n(n), _m(m)
            {
            }

            auto run() -> variant<Witness, RedExtension>
            {
                if (auto r = attempt())
                    return *r;

                if (auto w = _e.locate_near(_hi, {_p}, Shape::path, _n)) {
                    ++_e.stats().located_by_completion;
                    _e.note("constructions failed on a primary edge; completed " + to_string(*w));
                    return RedExtension{*w, "local completion"};
                }
                if (auto w = _e.locate_near(_hi, {_p}, Shape::cycle, _n)) {
                    ++_e.stats().located_by_completion;
                    _e.note("constructions failed on a primary edge; completed " + to_string(*w));
                    return RedExtension{*w, "local completion"};
                }
                if (auto w = find_mono_path(_e.coloring(), _hi, _n, _e.universe())) {
                    ++_e.stats().located_by_search;
                    _e.note("constructions failed on a primary edge; search found " + to_string(*w));
                    return RedExtension{*w, "search"};
                }
                if (auto w = find_mono_path(_e.coloring(), _lo, _m, _e.universe())) {
                    ++_e.stats().proof_fallbacks;
                    _e.note("path step fell back to search: " + to_string(*w));
                    return *w;
                }
                _e.fail("path step found neither colour's target");
            }
        };
    }

    auto cycle_step(const StepContext & ctx, Color primary, const vector<Vertex> & cycle, unsigned n, unsigned m, Shape want)
        -> variant<Witness, RedExtension>
    {
        Engine e(ctx);
        if (n < 4 || m < 3 || m > n || (want == Shape::path && m == n))
            throw ParameterError("cycle step needs n > 3, 3 <= m <= n, and n > m for a path");
        if (cycle.size() != 2 * (n - 1) || ! is_structure(ctx.coloring, primary, Shape::cycle, cycle, e.universe()))
            throw ParameterError("cycle step needs a " + to_string(primary) + " cycle of length " + to_string(n - 1));
        return CycleStep(e, primary, cycle, n, m, want).run();
    }

    auto path_step(const StepContext & ctx, Color primary, const vector<Vertex> & path, unsigned n, unsigned m)
        -> variant<Witness, RedExtension>
    {
        Engine e(ctx);
        if (n < 4 || m < 3 || m > n)
            throw ParameterError("path step needs n > 3 and 3 <= m <= n");
        if (path.size() != 2 * n - 1 || ! is_structure(ctx.coloring, primary, Shape::path, path, e.universe()))
            throw ParameterError("path step needs a " + to_string(primary) + " path of length " + to_string(n - 1));
        return PathStep(e, primary, path, n, m).run();
    }

    namespace
    {
        class Solver
        {
        private:
            const Coloring & _c;
            vector<string> * _trace;
            ExtractionStats & _stats;

            auto context(Vertex universe) -> StepContext
            {
                return StepContext{_c, universe, _trace, &_stats};
            }

            void note(const string & s)
            {
                if (_trace) _trace->push_back(s);
            }

            [[noreturn]] void fail(const string & what)
            {
                throw InvariantFailure(what, _trace ? *_trace : vector<string>{});
            }

            auto base(const string & label, Target red, Target blue, Vertex universe) -> Witness
            {
                ++_stats.oracle_base_cases;
                optional<Witness> w = find_mono(_c, Color::red, red, universe);
                if (! w)
                    w = find_mono(_c, Color::blue, blue, universe);
                if (! w)
                    fail("base case " + label + " without a witness on " + to_string(universe) + " vertices");
                note("base case " + label + " by search: " + to_string(*w));
                return *w;
            }

            // a primary C_n turned into a primary P_n, or the secondary target
            auto convert(const Witness & cycle, Target lo_target, Vertex universe) -> Witness
            {
                ++_stats.cycle_conversions;
                auto hi = cycle.color;
                unsigned n = cycle.length();
                const auto & cv = cycle.vertices;
                auto size = cv.size();
                for (std::size_t i = 0; i < n; ++i) {
                    // drop edge i, keep its middle vertex available
                    Seq path;
                    for (std::size_t k = 0; k + 1 < size; ++k)
                        path.push_back(cv[(2 * i + 2 + k) % size]);
                    for (int side = 0; side < 2; ++side) {
                        Seq s = side == 0 ? path : reversed(path);
                        for (Vertex p = 0; p < universe; ++p) {
                            if (contains(s, p)) continue;
                            for (Vertex q = 0; q < universe; ++q)
                                if (q != p && ! contains(s, q) && _c.is(hi, s.back(), p, q)) {
                                    s.insert(s.end(), {p, q});
                                    Witness w{hi, Shape::path, s};
                                    note("opened " + to_string(cycle) + " into " + to_string(w));
                                    return w;
                                }
                        }
                    }
                }
                if (auto w = find_mono(_c, opposite(hi), lo_target, universe)) {
                    note("cycle could not be opened; search found " + to_string(*w));
                    return *w;
                }
                if (auto w = find_mono_path(_c, hi, n, universe)) {
                    note("cycle could not be opened; search found " + to_string(*w));
                    return *w;
                }
                fail("no path from " + to_string(cycle));
            }

            auto adopt(variant<Witness, RedExtension> r) -> Witness
            {
                if (auto ext = std::get_if<RedExtension>(&r))
                    return ext->structure;
                return std::get<Witness>(r);
            }

        public:
            Solver(const Coloring & c, vector<string> * trace, ExtractionStats & stats) :
                _c(c), _trace(trace), _stats(stats)
            {
            }

            auto cc(unsigned n, unsigned m) -> Witness
            {
                Vertex u = ramsey_number({PairKind::Kind::cc, n, m});
                string label = "cc(" + to_string(n) + "," + to_string(m) + ")";
                if ((n == 3 && m == 3) || (n == 4 && m == 3) || (n == 4 && m == 4))
                    return base(label, {Shape::cycle, n}, {Shape::cycle, m}, u);

                auto sub = n == m ? cc(n - 1, n - 1) : cc(n - 1, m);
                if (n != m && sub.color == Color::blue)
                    return sub;
                note(label + " on " + to_string(u) + " vertices from " + to_string(sub));
                return adopt(cycle_step(context(u), sub.color, sub.vertices, n, m, Shape::cycle));
            }

            auto pp(unsigned n, unsigned m) -> Witness
            {
                Vertex u = ramsey_number({PairKind::Kind::pp, n, m});
                string label = "pp(" + to_string(n) + "," + to_string(m) + ")";
                if ((n == 3 && m == 3) || (n == 4 && m == 3) || (n == 4 && m == 4))
                    return base(label, {Shape::path, n}, {Shape::path, m}, u);

                auto sub = n == m ? pp(n - 1, n - 1) : pp(n - 1, m);
                if (n != m && sub.color == Color::blue)
                    return sub;
                note(label + " on " + to_string(u) + " vertices from " + to_string(sub));
                auto w = adopt(path_step(context(u), sub.color, sub.vertices, n, m));
                if (w.shape == Shape::cycle)
                    return convert(w, {Shape::path, m}, u);
                return w;
            }

            auto pncm(unsigned n, unsigned m) -> Witness
            {
                Vertex u = ramsey_number({PairKind::Kind::pncm, n, m});
                auto sub = cc(n, m);
                if (sub.color == Color::blue)
                    return sub;
                note("pncm(" + to_string(n) + "," + to_string(m) + ") on " + to_string(u) + " vertices from " + to_string(sub));
                return convert(sub, {Shape::cycle, m}, u);
            }

            // red P_m or blue C_n with n > m
            auto pmcn(unsigned m, unsigned n) -> Witness
            {
                Vertex u = ramsey_number({PairKind::Kind::pmcn, n, m});
                string label = "pmcn(" + to_string(m) + "," + to_string(n) + ")";
                if (m == 3 && n == 4)
                    return base(label, {Shape::path, m}, {Shape::cycle, n}, u);

                auto sub = n == m + 1 ? pncm(m, m) : pmcn(m, n - 1);
                if (sub.color == Color::red)
                    return sub;
                note(label + " on " + to_string(u) + " vertices from " + to_string(sub));
                return adopt(cycle_step(context(u), Color::blue, sub.vertices, n, m, Shape::path));
            }
        };
    }

    auto solve(const PairKind & p, const Coloring & c, bool keep_trace) -> Extraction
    {
        auto threshold = ramsey_number(p);
        if (c.size() < threshold)
            throw ParameterError("colouring has " + to_string(c.size()) + " vertices, below the threshold " +
                    to_string(threshold) + " of " + to_string(p));

        Extraction result{Witness{Color::red, Shape::path, {}}, {}, {}};
        vector<string> * trace = keep_trace ? &result.trace : nullptr;
        Solver solver(c, trace, result.stats);
        switch (p.kind) {
            case PairKind::Kind::cc: result.witness = solver.cc(p.n, p.m); break;
            case PairKind::Kind::pp: result.witness = solver.pp(p.n, p.m); break;
            case PairKind::Kind::pncm: result.witness = solver.pncm(p.n, p.m); break;
            case PairKind::Kind::pmcn: result.witness = solver.pmcn(p.m, p.n); break;
        }

        auto & w = result.witness;
        auto t = target_for(p, w.color);
        if (! witness_matches(w, w.color, t.shape, t.length))
            throw InvariantFailure(to_string(w) + " does not match the " + to_string(w.color) + " target " + to_string(t),
                    result.trace);
        for (auto v : w.vertices)
            if (v >= threshold)
                throw InvariantFailure(to_string(w) + " leaves the first " + to_string(threshold) + " vertices", result.trace);
        if (auto verdict = verify_witness(c, w); ! verdict)
            throw InvariantFailure(to_string(w) + " fails verification: " + verdict.reason, result.trace);
        return result;
    }
}
