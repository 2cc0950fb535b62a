#include <loose_ramsey/oracle.hh>

#include <algorithm>
#include <set>
#include <vector>

using std::optional;
using std::vector;

namespace loose_ramsey
{
    using std::to_string;

    namespace
    {
        class Backtracker
        {
        private:
            const Coloring & _c;
            Color _color;
            Vertex _universe;
            vector<char> _used;
            vector<char> _usable;
            unsigned _usable_fresh = 0;
            vector<Vertex> _seq;

            void take(Vertex v)
            {
                _used[v] = 1;
                _seq.push_back(v);
                if (_usable[v]) --_usable_fresh;
            }

            void drop()
            {
                auto v = _seq.back();
                _seq.pop_back();
                _used[v] = 0;
                if (_usable[v]) ++_usable_fresh;
            }

            auto extend_path(unsigned edges_left) -> bool
            {
                if (edges_left == 0)
                    return true;
                if (_usable_fresh < 2 * edges_left)
                    return false;
                Vertex last = _seq.back();
                for (Vertex p = 0; p < _universe; ++p) {
                    if (_used[p] || ! _usable[p]) continue;
                    for (Vertex q = 0; q < _universe; ++q) {
                        if (q == p || _used[q] || ! _usable[q]) continue;
                        if (! _c.is(_color, last, p, q)) continue;
                        take(p);
                        take(q);
                        if (extend_path(edges_left - 1))
                            return true;
                        drop();
                        drop();
                    }
                }
                return false;
            }

            // links of a cycle stay above _seq[0]; the closing edge is added last
            auto extend_cycle(unsigned edges_left) -> bool
            {
                Vertex first = _seq[0], last = _seq.back();
                if (edges_left == 1) {
                    // reflection: second link below the last one
                    if (_seq.size() >= 3 && _seq[2] > last)
                        return false;
                    for (Vertex p = 0; p < _universe; ++p) {
                        if (_used[p] || ! _usable[p]) continue;
                        if (_c.is(_color, last, p, first)) {
                            take(p);
                            return true;
                        }
                    }
                    return false;
                }
                if (_usable_fresh < 2 * edges_left - 1)
                    return false;
                for (Vertex p = 0; p < _universe; ++p) {
                    if (_used[p] || ! _usable[p]) continue;
                    for (Vertex q = first + 1; q < _universe; ++q) {
                        if (q == p || _used[q] || ! _usable[q]) continue;
                        if (! _c.is(_color, last, p, q)) continue;
                        take(p);
                        take(q);
                        if (extend_cycle(edges_left - 1))
                            return true;
                        drop();
                        drop();
                    }
                }
                return false;
            }

        public:
            Backtracker(const Coloring & c, Color color, Vertex universe) :
                _c(c),
                _color(color),
                _universe(universe == 0 ? c.size() : std::min(universe, c.size())),
                _used(_universe, 0),
                _usable(_universe, 0)
            {
                // a vertex is usable when it lies in at least one edge of the colour
                for (Vertex z = 2; z < _universe; ++z)
                    for (Vertex y = 1; y < z; ++y)
                        for (Vertex x = 0; x < y; ++x)
                            if (_c.color_at_rank(colex_rank(TripleEdge{x, y, z})) == _color)
                                _usable[x] = _usable[y] = _usable[z] = 1;
                _usable_fresh = static_cast<unsigned>(std::count(_usable.begin(), _usable.end(), 1));
            }

            auto path(unsigned length) -> optional<vector<Vertex>>
            {
                if (_usable_fresh < 2 * length + 1)
                    return std::nullopt;
                for (Vertex v = 0; v < _universe; ++v) {
                    if (! _usable[v]) continue;
                    take(v);
                    if (extend_path(length))
                        return _seq;
                    drop();
                }
                return std::nullopt;
            }

            auto cycle(unsigned length) -> optional<vector<Vertex>>
            {
                if (_usable_fresh < 2 * length)
                    return std::nullopt;
                for (Vertex v = 0; v < _universe; ++v) {
                    if (! _usable[v]) continue;
                    take(v);
                    if (extend_cycle(length))
                        return _seq;
                    drop();
                }
                return std::nullopt;
            }
        };
    }

    auto find_mono_path(const Coloring & c, Color color, unsigned length, Vertex universe) -> optional<Witness>
    {
        if (length < 1)
            throw ParameterError("path length must be at least 1");
        if (auto seq = Backtracker(c, color, universe).path(length))
            return Witness{color, Shape::path, std::move(*seq)};
        return std::nullopt;
    }

    auto find_mono_cycle(const Coloring & c, Color color, unsigned length, Vertex universe) -> optional<Witness>
    {
        if (length < 3)
            throw ParameterError("cycle length must be at least 3");
        if (auto seq = Backtracker(c, color, universe).cycle(length))
            return Witness{color, Shape::cycle, std::move(*seq)};
        return std::nullopt;
    }

    auto find_mono(const Coloring & c, Color color, const Target & t, Vertex universe) -> optional<Witness>
    {
        return t.shape == Shape::path ? find_mono_path(c, color, t.length, universe)
                                      : find_mono_cycle(c, color, t.length, universe);
    }

    auto longest_mono_path(const Coloring & c, Color color, Vertex universe) -> std::pair<unsigned, optional<Witness>>
    {
        std::pair<unsigned, optional<Witness>> best{0, std::nullopt};
        Vertex n = universe == 0 ? c.size() : std::min(universe, c.size());
        for (unsigned len = 1; 2 * len + 1 <= n; ++len) {
            auto w = find_mono_path(c, color, len, universe);
            if (! w)
                break;
            best = {len, std::move(w)};
        }
        return best;
    }

    namespace
    {
        // every structure of the target on n vertices, as a mask over colex ranks
        auto structure_masks(Vertex n, const Target & t) -> vector<std::uint32_t>
        {
            std::set<std::uint32_t> masks;
            auto needed = t.shape == Shape::path ? 2 * t.length + 1 : 2 * t.length;
            if (needed > n)
                return {};

            vector<Vertex> labels(n);
            for (Vertex v = 0; v < n; ++v) labels[v] = v;
            // every ordered selection of `needed` labels: permute and take a prefix
            do {
                std::uint32_t mask = 0;
                for (auto & e : structure_edges(t.shape, std::span<const Vertex>(labels.data(), needed)))
                    mask |= std::uint32_t{1} << colex_rank(e);
                masks.insert(mask);
            } while (std::next_permutation(labels.begin(), labels.end()));
            return {masks.begin(), masks.end()};
        }

        auto contains_any(std::uint32_t color_bits, const vector<std::uint32_t> & masks) -> bool
        {
            for (auto m : masks)
                if ((color_bits & m) == m)
                    return true;
            return false;
        }
    }

    auto exhaustive_avoidance_search(Vertex n, const Target & red, const Target & blue, EnumerationMode mode) -> EnumerationResult
    {
        auto bits = triple_count(n);
        if (bits > enumeration_bit_budget)
            throw ParameterError("enumeration over " + to_string(n) + " vertices needs 2^" + to_string(bits) +
                    " colourings, above the 2^" + to_string(enumeration_bit_budget) + " budget");
        if (n < 3)
            throw ParameterError("enumeration needs at least 3 vertices");

        auto red_masks = structure_masks(n, red), blue_masks = structure_masks(n, blue);
        std::uint32_t all = bits == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << bits) - 1;

        EnumerationResult result;
        for (std::uint64_t counter = 0; counter <= all; ++counter) {
            auto reds = static_cast<std::uint32_t>(counter);
            ++result.examined;
            if (contains_any(reds, red_masks) || contains_any(~reds & all, blue_masks))
                continue;
            ++result.count;
            if (! result.avoiding) {
                Coloring c(n);
                for (std::uint64_t r = 0; r < bits; ++r)
                    if ((reds >> r) & 1)
                        c.set_at_rank(r, Color::red);
                result.avoiding = std::move(c);
            }
            if (mode == EnumerationMode::find_one)
                break;
        }
        return result;
    }
}
