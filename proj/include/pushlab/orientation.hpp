#ifndef PUSHLAB_ORIENTATION_HPP
#define PUSHLAB_ORIENTATION_HPP

#include <pushlab/graph.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pushlab
{
    using OutMasks = std::array<Mask, max_order>;

    /// An orientation of a simple graph. Stored as out-neighbourhood masks; the per-edge
    /// direction bit view (set means u -> v for the edge {u, v} with u < v) is derived.
    class Orientation
    {
        public:
            Orientation() = default;

            /// bits[i] gives the direction of base.edges()[i].
            Orientation(const Graph & base, std::span<const bool> bits);

            /// Checked: every edge gets exactly one direction and non-edges none.
            static auto from_out_masks(const Graph & base, const OutMasks & out) -> Orientation;

            auto base() const -> const Graph & { return _base; }
            auto order() const -> int { return _base.order(); }
            auto out_neighbours(int v) const -> Mask { return _out[v]; }
            auto in_neighbours(int v) const -> Mask { return static_cast<Mask>(_base.neighbours(v) & ~_out[v]); }
            auto has_arc(int from, int to) const -> bool { return _out[from] & bit(to); }
            auto out_masks() const -> const OutMasks & { return _out; }

            auto direction_bits() const -> std::vector<bool>;

            auto operator== (const Orientation &) const -> bool = default;

        private:
            Graph _base;
            OutMasks _out{};

            struct Unchecked { };
            Orientation(Unchecked, const Graph & base, const OutMasks & out) : _base(base), _out(out) { }

            friend class PushClassSpace;
            friend auto push(const Orientation &, VertexSet) -> Orientation;
            friend auto orientation_from_index(const Graph &, std::uint64_t) -> Orientation;
    };

    auto orient(const Graph & g, std::span<const bool> bits) -> Orientation;

    /// Orientation whose direction bits are the binary digits of index (bit i for edge i).
    auto orientation_from_index(const Graph & g, std::uint64_t index) -> Orientation;

    /// Reverses every arc with exactly one end in s.
    auto push(const Orientation & d, VertexSet s) -> Orientation;

    inline auto push_out_masks(const Graph & g, const OutMasks & out, Mask s) -> OutMasks
    {
        OutMasks result = out;
        for (int v = 0; v < g.order(); ++v) {
            Mask across = (s & bit(v)) ? static_cast<Mask>(g.neighbours(v) & ~s) : static_cast<Mask>(g.neighbours(v) & s);
            result[v] ^= across;
        }
        return result;
    }

    /// True iff d2 is obtained from d1 by pushing some vertex set. Throws GraphError when the
    /// base graphs differ.
    auto push_related(const Orientation & d1, const Orientation & d2) -> bool;

    /// The push classes of a graph, gauge fixed: spanning-forest edges point from the lower to
    /// the higher label, and class index r sets the remaining ("free") edges by its bits, bit i
    /// reversing free edge i from its low-to-high default.
    class PushClassSpace
    {
        public:
            explicit PushClassSpace(const Graph & g);

            auto base() const -> const Graph & { return _base; }
            auto components() const -> int { return _components; }
            auto free_edges() const -> const std::vector<Edge> & { return _free; }

            /// log2 of the number of classes: m - n + c.
            auto dimension() const -> int { return static_cast<int>(_free.size()); }
            auto class_count() const -> std::uint64_t { return std::uint64_t{ 1 } << _free.size(); }

            auto out_masks(std::uint64_t index) const -> OutMasks
            {
                OutMasks out = _gauge;
                for (std::size_t i = 0; i < _free.size(); ++i)
                    if ((index >> i) & 1u) {
                        out[_free[i].u] ^= bit(_free[i].v);
                        out[_free[i].v] ^= bit(_free[i].u);
                    }
                return out;
            }

            auto representative(std::uint64_t index) const -> Orientation
            {
                return Orientation{ Orientation::Unchecked{}, _base, out_masks(index) };
            }

            /// Index of the class containing d.
            auto class_of(const Orientation & d) const -> std::uint64_t;

        private:
            Graph _base;
            int _components = 0;
            std::vector<Edge> _free;
            std::vector<Edge> _forest;
            OutMasks _gauge{};
    };

    auto push_class_reps(const Graph & g) -> std::vector<Orientation>;

    enum class Agreement
    {
        agree,
        disagree
    };

    /// Status of the pair u, v on their common neighbour w. Throws GraphError unless u != v
    /// and w is adjacent to both.
    auto agree_status(const Orientation & d, int u, int v, int w) -> Agreement;

    /// Outcome of a pairwise property check; failing_pair is the lexicographically least
    /// pair violating it.
    struct PairCheck
    {
        bool holds = true;
        std::optional<Edge> failing_pair;

        explicit operator bool() const { return holds; }
    };

    // Mask-level forms used by the search kernels. For a non-adjacent pair u, v the common
    // neighbours split into those where they agree and those where they disagree; an
    // oriented clique needs a disagreement (a directed 2-path) for every such pair, and a
    // push clique needs both.

    inline auto agreeing(const Graph & g, const OutMasks & out, int u, int v) -> Mask
    {
        Mask in_u = static_cast<Mask>(g.neighbours(u) & ~out[u]);
        Mask in_v = static_cast<Mask>(g.neighbours(v) & ~out[v]);
        return static_cast<Mask>((out[u] & out[v]) | (in_u & in_v));
    }

    inline auto disagreeing(const Graph & g, const OutMasks & out, int u, int v) -> Mask
    {
        Mask in_u = static_cast<Mask>(g.neighbours(u) & ~out[u]);
        Mask in_v = static_cast<Mask>(g.neighbours(v) & ~out[v]);
        return static_cast<Mask>((out[u] & in_v) | (in_u & out[v]));
    }

    inline auto first_non_oriented_clique_pair(const Graph & g, const OutMasks & out) -> std::optional<Edge>
    {
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (! g.adjacent(u, v) && ! disagreeing(g, out, u, v))
                    return Edge{ u, v };
        return std::nullopt;
    }

    inline auto first_non_push_clique_pair(const Graph & g, const OutMasks & out) -> std::optional<Edge>
    {
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (! g.adjacent(u, v) && (! agreeing(g, out, u, v) || ! disagreeing(g, out, u, v)))
                    return Edge{ u, v };
        return std::nullopt;
    }

    auto is_oriented_clique(const Orientation & d) -> PairCheck;

    /// Pairwise test: every pair adjacent or on a special 4-cycle.
    auto is_push_clique(const Orientation & d) -> PairCheck;

    /// Definitional test: every orientation in the push class of d is an oriented clique.
    /// Throws GraphError for order above 10.
    auto is_push_clique_bruteforce(const Orientation & d) -> bool;
}

#endif
