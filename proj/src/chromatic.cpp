#include <pushlab/chromatic.hpp>
#include <pushlab/error.hpp>

#include <algorithm>
#include <array>
#include <numeric>

namespace pushlab
{
    namespace
    {
        class ColouringSearch
        {
            public:
                explicit ColouringSearch(const Orientation & d) :
                    _d(d),
                    _n(d.order())
                {
                    _order.resize(_n);
                    std::iota(_order.begin(), _order.end(), 0);
                    std::stable_sort(_order.begin(), _order.end(), [&] (int a, int b) {
                        return d.base().degree(a) > d.base().degree(b);
                    });
                    _colour.fill(-1);
                }

                auto try_colours(int k) -> bool
                {
                    _limit = k;
                    for (auto & row : _arcs)
                        row.fill(0);
                    _colour.fill(-1);
                    return assign(0, 0);
                }

                auto colours() const -> std::vector<int>
                {
                    return std::vector<int>(_colour.begin(), _colour.begin() + _n);
                }

            private:
                const Orientation & _d;
                int _n;
                int _limit = 0;
                std::vector<int> _order;
                std::array<int, max_order> _colour{};
                // _arcs[a][b]: number of arcs from colour class a to colour class b
                std::array<std::array<int, max_order>, max_order> _arcs{};

                auto fits(int v, int c) const -> bool
                {
                    // classes v would send arcs to and receive arcs from
                    unsigned to = 0, from = 0;
                    bool ok = true;
                    for_each_bit(_d.base().neighbours(v), [&] (int w) {
                        int cw = _colour[w];
                        if (cw < 0)
                            return;
                        if (cw == c)
                            ok = false;
                        else if (_d.has_arc(v, w))
                            to |= 1u << cw;
                        else
                            from |= 1u << cw;
                    });
                    if (! ok || (to & from))
                        return false;
                    for (int a = 0; a < _limit; ++a) {
                        if (((to >> a) & 1u) && _arcs[a][c] > 0)
                            return false;
                        if (((from >> a) & 1u) && _arcs[c][a] > 0)
                            return false;
                    }
                    return true;
                }

                void record(int v, int c, int delta)
                {
                    for_each_bit(_d.base().neighbours(v), [&] (int w) {
                        int cw = _colour[w];
                        if (cw < 0)
                            return;
                        if (_d.has_arc(v, w))
                            _arcs[c][cw] += delta;
                        else
                            _arcs[cw][c] += delta;
                    });
                }

                // colours beyond used + 1 would only be a renaming of an earlier branch
                auto assign(int k, int used) -> bool
                {
                    if (k == _n)
                        return true;
                    int v = _order[k];
                    for (int c = 0; c < std::min(_limit, used + 1); ++c) {
                        if (! fits(v, c))
                            continue;
                        record(v, c, +1);
                        _colour[v] = c;
                        if (assign(k + 1, std::max(used, c + 1)))
                            return true;
                        _colour[v] = -1;
                        record(v, c, -1);
                    }
                    return false;
                }
        };
    }

    auto is_oriented_colouring(const Orientation & d, std::span<const int> colours) -> bool
    {
        int n = d.order();
        if (static_cast<int>(colours.size()) != n)
            return false;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (! d.has_arc(u, v))
                    continue;
                if (colours[u] == colours[v])
                    return false;
                for (int w = 0; w < n; ++w)
                    for (int x = 0; x < n; ++x)
                        if (d.has_arc(w, x) && colours[u] == colours[x] && colours[v] == colours[w])
                            return false;
            }
        return true;
    }

    auto oriented_chromatic_number(const Orientation & d) -> OrientedChromatic
    {
        if (d.order() > max_chromatic_order)
            throw GraphError{ "oriented_chromatic_number supports order at most 7" };
        ColouringSearch search{ d };
        for (int k = d.order() == 0 ? 0 : 1; k <= d.order(); ++k) {
            if (search.try_colours(k)) {
                auto colours = search.colours();
                int size = colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end()) + 1;
                return OrientedChromatic{ size, ColoringCertificate{ colours, size } };
            }
        }
        // giving every vertex its own colour always works
        throw Error{ "oriented colouring search failed to find the trivial colouring" };
    }

    auto pushable_chromatic_number(const Orientation & d) -> int
    {
        int n = d.order();
        if (n > max_chromatic_order)
            throw GraphError{ "pushable_chromatic_number supports order at most 7" };
        if (n == 0)
            return 0;
        int best = n;
        for (Mask rest = 0; rest < bit(n - 1); ++rest) {
            Mask s = static_cast<Mask>((rest << 1) | 1u);
            best = std::min(best, oriented_chromatic_number(push(d, VertexSet{ s })).number);
        }
        return best;
    }
}
