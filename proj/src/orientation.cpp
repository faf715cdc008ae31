#include <pushlab/orientation.hpp>
#include <pushlab/error.hpp>

#include <algorithm>
#include <string>

namespace pushlab
{
    Orientation::Orientation(const Graph & base, std::span<const bool> bits) :
        _base(base)
    {
        auto edges = base.edges();
        if (bits.size() != edges.size())
            throw GraphError{ "orientation has " + std::to_string(bits.size()) + " direction bits but the graph has "
                + std::to_string(edges.size()) + " edges" };
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (bits[i])
                _out[u] |= bit(v);
            else
                _out[v] |= bit(u);
        }
    }

    auto Orientation::from_out_masks(const Graph & base, const OutMasks & out) -> Orientation
    {
        for (int v = 0; v < base.order(); ++v) {
            if (out[v] & ~base.neighbours(v))
                throw GraphError{ "arc from vertex " + std::to_string(v) + " is not an edge of the base graph" };
            for_each_bit(out[v], [&] (int w) {
                if (out[w] & bit(v))
                    throw GraphError{ "opposite arcs between " + std::to_string(v) + " and " + std::to_string(w) };
            });
        }
        for (const auto & [u, v] : base.edges())
            if (! (out[u] & bit(v)) && ! (out[v] & bit(u)))
                throw GraphError{ "edge " + to_string(Edge{ u, v }) + " has no direction" };
        for (int v = base.order(); v < max_order; ++v)
            if (out[v])
                throw GraphError{ "arcs on a vertex beyond the graph order" };
        return Orientation{ Unchecked{}, base, out };
    }

    auto Orientation::direction_bits() const -> std::vector<bool>
    {
        std::vector<bool> bits;
        for (const auto & [u, v] : _base.edges())
            bits.push_back(has_arc(u, v));
        return bits;
    }

    auto orient(const Graph & g, std::span<const bool> bits) -> Orientation
    {
        return Orientation{ g, bits };
    }

    auto orientation_from_index(const Graph & g, std::uint64_t index) -> Orientation
    {
        OutMasks out{};
        int i = 0;
        for (const auto & [u, v] : g.edges()) {
            if ((index >> i) & 1u)
                out[u] |= bit(v);
            else
                out[v] |= bit(u);
            ++i;
        }
        return Orientation{ Orientation::Unchecked{}, g, out };
    }

    auto push(const Orientation & d, VertexSet s) -> Orientation
    {
        if (s.mask() & ~d.base().vertices())
            throw GraphError{ "push set contains a vertex outside the graph" };
        return Orientation{ Orientation::Unchecked{}, d.base(), push_out_masks(d.base(), d.out_masks(), s.mask()) };
    }

    auto push_related(const Orientation & d1, const Orientation & d2) -> bool
    {
        if (d1.base() != d2.base())
            throw GraphError{ "push_related needs orientations of the same graph" };

        // Label vertices pushed / not pushed along a spanning forest so that the label flips
        // exactly across disagreeing forest edges. The labelling is forced up to complement
        // per component, so d2 is reachable iff it reproduces d2 on every edge.
        const Graph & g = d1.base();
        Mask seen = 0, pushed = 0;
        for (int root = 0; root < g.order(); ++root) {
            if (seen & bit(root))
                continue;
            seen |= bit(root);
            Mask frontier = bit(root);
            while (frontier) {
                int v = lowest(frontier);
                frontier &= static_cast<Mask>(frontier - 1);
                Mask differ = static_cast<Mask>(d1.out_neighbours(v) ^ d2.out_neighbours(v));
                Mask fresh = static_cast<Mask>(g.neighbours(v) & ~seen);
                Mask flip = (pushed & bit(v)) ? static_cast<Mask>(fresh & ~differ) : static_cast<Mask>(fresh & differ);
                pushed |= flip;
                seen |= fresh;
                frontier |= fresh;
            }
        }
        return push_out_masks(g, d1.out_masks(), pushed) == d2.out_masks();
    }

    PushClassSpace::PushClassSpace(const Graph & g) :
        _base(g)
    {
        Mask seen = 0;
        for (int root = 0; root < g.order(); ++root) {
            if (seen & bit(root))
                continue;
            ++_components;
            seen |= bit(root);
            // breadth first, lowest label first
            std::array<int, max_order> queue{};
            int head = 0, tail = 0;
            queue[tail++] = root;
            while (head < tail) {
                int v = queue[head++];
                for_each_bit(static_cast<Mask>(g.neighbours(v) & ~seen), [&] (int w) {
                    seen |= bit(w);
                    queue[tail++] = w;
                    _forest.push_back(Edge{ std::min(v, w), std::max(v, w) });
                });
            }
        }

        for (const auto & e : g.edges()) {
            _gauge[e.u] |= bit(e.v);
            bool in_forest = false;
            for (const auto & f : _forest)
                if (f == e)
                    in_forest = true;
            if (! in_forest)
                _free.push_back(e);
        }
    }

    auto PushClassSpace::class_of(const Orientation & d) const -> std::uint64_t
    {
        if (d.base() != _base)
            throw GraphError{ "orientation is not of this graph" };

        // Push forest vertices so that every forest edge points low-to-high, then read the
        // free edges off.
        Mask seen = 0, pushed = 0;
        for (int root = 0; root < _base.order(); ++root) {
            if (seen & bit(root))
                continue;
            seen |= bit(root);
            Mask frontier = bit(root);
            while (frontier) {
                int v = lowest(frontier);
                frontier &= static_cast<Mask>(frontier - 1);
                for (const auto & f : _forest) {
                    int w;
                    if (f.u == v)
                        w = f.v;
                    else if (f.v == v)
                        w = f.u;
                    else
                        continue;
                    if (seen & bit(w))
                        continue;
                    seen |= bit(w);
                    frontier |= bit(w);
                    bool low_to_high = d.has_arc(f.u, f.v);
                    bool v_pushed = pushed & bit(v);
                    // the edge direction flips iff exactly one end is pushed
                    if (low_to_high == v_pushed)
                        pushed |= bit(w);
                }
            }
        }

        OutMasks normal = push_out_masks(_base, d.out_masks(), pushed);
        std::uint64_t index = 0;
        for (std::size_t i = 0; i < _free.size(); ++i)
            if (! (normal[_free[i].u] & bit(_free[i].v)))
                index |= std::uint64_t{ 1 } << i;
        return index;
    }

    auto push_class_reps(const Graph & g) -> std::vector<Orientation>
    {
        PushClassSpace space{ g };
        if (space.dimension() > 20)
            throw BudgetError{ "more than 2^20 push classes" };
        std::vector<Orientation> reps;
        reps.reserve(space.class_count());
        for (std::uint64_t r = 0; r < space.class_count(); ++r)
            reps.push_back(space.representative(r));
        return reps;
    }

    auto agree_status(const Orientation & d, int u, int v, int w) -> Agreement
    {
        const Graph & g = d.base();
        auto in_range = [&] (int x) { return x >= 0 && x < g.order(); };
        if (! in_range(u) || ! in_range(v) || ! in_range(w))
            throw GraphError{ "agree_status: vertex out of range" };
        if (u == v)
            throw GraphError{ "agree_status: u and v must be distinct" };
        if (! g.adjacent(w, u) || ! g.adjacent(w, v))
            throw GraphError{ "agree_status: " + std::to_string(w) + " is not a common neighbour of "
                + std::to_string(u) + " and " + std::to_string(v) };
        return (agreeing(g, d.out_masks(), u, v) & bit(w)) ? Agreement::agree : Agreement::disagree;
    }

    auto is_oriented_clique(const Orientation & d) -> PairCheck
    {
        auto pair = first_non_oriented_clique_pair(d.base(), d.out_masks());
        return PairCheck{ ! pair.has_value(), pair };
    }

    auto is_push_clique(const Orientation & d) -> PairCheck
    {
        auto pair = first_non_push_clique_pair(d.base(), d.out_masks());
        return PairCheck{ ! pair.has_value(), pair };
    }

    auto is_push_clique_bruteforce(const Orientation & d) -> bool
    {
        int n = d.order();
        if (n > 10)
            throw GraphError{ "is_push_clique_bruteforce supports order at most 10" };
        if (n == 0)
            return true;
        // S and its complement give the same orientation, so only sets containing 0
        for (Mask rest = 0; rest < bit(n - 1); ++rest) {
            Mask s = static_cast<Mask>((rest << 1) | 1u);
            auto pushed = push_out_masks(d.base(), d.out_masks(), s);
            if (first_non_oriented_clique_pair(d.base(), pushed))
                return false;
        }
        return true;
    }
}
