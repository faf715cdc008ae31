#include <pushlab/canonical.hpp>

namespace pushlab
{
    namespace
    {
        // Branch and bound over labellings, filling canonical positions 0, 1, 2, ... in order.
        // Column k of the code depends only on the vertices at positions 0..k, so a candidate
        // for position k whose column is not minimal among the remaining vertices can never
        // lead to the least code. Unplaced twins are interchangeable by an automorphism that
        // fixes every placed vertex, so only one per twin class is tried.
        class LabellingSearch
        {
            public:
                explicit LabellingSearch(const Graph & g) :
                    _graph(g),
                    _n(g.order())
                {
                    for (int v = 0; v < _n; ++v) {
                        Mask twins = 0;
                        for (int w = 0; w < _n; ++w) {
                            Mask nv = static_cast<Mask>(g.neighbours(v) & ~bit(w));
                            Mask nw = static_cast<Mask>(g.neighbours(w) & ~bit(v));
                            if (nv == nw)
                                twins |= bit(w);
                        }
                        _twins[v] = twins;
                    }
                }

                /// Full search; returns the least code and a labelling achieving it.
                auto run() -> CanonicalForm
                {
                    _early_exit = false;
                    _have_best = false;
                    std::array<Mask, max_order> partial{};
                    descend(0, 0, partial, false);
                    CanonicalForm result;
                    result.code.order = _n;
                    result.code.columns = _best_columns;
                    for (int k = 0; k < _n; ++k)
                        result.perm[_best_sequence[k]] = k;
                    return result;
                }

                /// True iff no labelling beats the identity.
                auto identity_is_least() -> bool
                {
                    auto identity = encode(_graph);
                    _best_columns = identity.columns;
                    _have_best = true;
                    _early_exit = true;
                    _found_smaller = false;
                    std::array<Mask, max_order> partial{};
                    descend(0, 0, partial, true);
                    return ! _found_smaller;
                }

            private:
                const Graph & _graph;
                int _n;
                std::array<Mask, max_order> _twins{};

                std::array<int, max_order> _sequence{};
                std::array<Mask, max_order> _columns{};
                std::array<int, max_order> _best_sequence{};
                std::array<Mask, max_order> _best_columns{};
                bool _have_best = false;
                bool _early_exit = false;
                bool _found_smaller = false;

                // partial[v] holds the adjacency of unplaced v to positions 0..depth-1, with
                // position 0 as the most significant of the depth bits. tied means the prefix
                // equals the best prefix so far; otherwise it is strictly smaller (or there is no
                // best yet).
                auto descend(int depth, Mask placed, const std::array<Mask, max_order> & partial, bool tied) -> bool
                {
                    if (depth == _n) {
                        if (! tied || ! _have_best) {
                            if (_early_exit) {
                                _found_smaller = true;
                                return true;
                            }
                            _best_columns = _columns;
                            _best_sequence = _sequence;
                            _have_best = true;
                        }
                        return false;
                    }

                    Mask unplaced = static_cast<Mask>(low_mask(_n) & ~placed);
                    Mask least = 0xFFFF;
                    for_each_bit(unplaced, [&] (int v) {
                        if (partial[v] < least)
                            least = partial[v];
                    });

                    Mask tried_twins = 0;
                    Mask candidates = unplaced;
                    while (candidates) {
                        int v = lowest(candidates);
                        candidates &= static_cast<Mask>(candidates - 1);
                        if (partial[v] != least || (tried_twins & bit(v)))
                            continue;
                        tried_twins |= static_cast<Mask>(_twins[v] & unplaced);

                        // the best may have changed while exploring a sibling
                        bool now_tied = tied && _have_best;
                        if (now_tied) {
                            if (least > _best_columns[depth])
                                return false;
                            if (least < _best_columns[depth]) {
                                if (_early_exit) {
                                    _found_smaller = true;
                                    return true;
                                }
                                now_tied = false;
                            }
                        }

                        _sequence[depth] = v;
                        _columns[depth] = least;

                        std::array<Mask, max_order> next{};
                        Mask rest = static_cast<Mask>(unplaced & ~bit(v));
                        Mask nv = _graph.neighbours(v);
                        for_each_bit(rest, [&] (int w) {
                            next[w] = static_cast<Mask>((partial[w] << 1) | ((nv >> w) & 1u));
                        });

                        if (descend(depth + 1, static_cast<Mask>(placed | bit(v)), next, now_tied))
                            return true;

                        // any new best found below shares this prefix
                        if (! _early_exit)
                            tied = true;
                    }
                    return false;
                }
        };
    }

    auto encode(const Graph & g) -> CanonicalCode
    {
        CanonicalCode code;
        code.order = g.order();
        for (int j = 1; j < g.order(); ++j) {
            Mask col = 0;
            Mask nj = g.neighbours(j);
            for (int i = 0; i < j; ++i)
                col = static_cast<Mask>((col << 1) | ((nj >> i) & 1u));
            code.columns[j] = col;
        }
        return code;
    }

    auto decode(const CanonicalCode & code) -> Graph
    {
        GraphBuilder b{ code.order };
        for (int j = 1; j < code.order; ++j)
            for (int i = 0; i < j; ++i)
                if ((code.columns[j] >> (j - 1 - i)) & 1u)
                    b.add_edge(i, j);
        return b.build();
    }

    auto canonical_form(const Graph & g) -> CanonicalForm
    {
        if (g.order() == 0)
            return CanonicalForm{};
        LabellingSearch search{ g };
        return search.run();
    }

    auto canonical_graph(const Graph & g) -> Graph
    {
        return decode(canonical_form(g).code);
    }

    auto is_canonical(const Graph & g) -> bool
    {
        if (g.order() <= 1)
            return true;
        LabellingSearch search{ g };
        return search.identity_is_least();
    }

    auto are_isomorphic(const Graph & g, const Graph & h) -> bool
    {
        if (g.order() != h.order() || g.edge_count() != h.edge_count())
            return false;
        return canonical_form(g).code == canonical_form(h).code;
    }

    auto CanonicalCodeHash::operator() (const CanonicalCode & c) const noexcept -> std::size_t
    {
        std::size_t h = static_cast<std::size_t>(c.order) * 0x9E3779B97F4A7C15ull;
        for (int j = 1; j < c.order; ++j)
            h = (h ^ c.columns[j]) * 0x100000001B3ull + (h >> 29);
        return h;
    }
}
