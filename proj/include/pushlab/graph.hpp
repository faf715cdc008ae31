#ifndef PUSHLAB_GRAPH_HPP
#define PUSHLAB_GRAPH_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pushlab
{
    inline constexpr int max_order = 12;

    /// One bit per vertex; bit v set means vertex v is a member.
    using Mask = std::uint16_t;

    constexpr auto bit(int v) -> Mask
    {
        return static_cast<Mask>(Mask{ 1 } << v);
    }

    constexpr auto low_mask(int n) -> Mask
    {
        return static_cast<Mask>((1u << n) - 1u);
    }

    constexpr auto popcount(Mask m) -> int
    {
        return std::popcount(m);
    }

    constexpr auto lowest(Mask m) -> int
    {
        return std::countr_zero(m);
    }

    /// Iterates over the members of a mask in increasing order.
    template <typename F>
    constexpr void for_each_bit(Mask m, F && f)
    {
        while (m) {
            int v = std::countr_zero(m);
            m &= static_cast<Mask>(m - 1);
            f(v);
        }
    }

    class VertexSet
    {
        public:
            constexpr VertexSet() = default;
            constexpr explicit VertexSet(Mask members) : _members(members) { }

            static auto of(std::initializer_list<int> vertices) -> VertexSet;
            static constexpr auto all(int n) -> VertexSet { return VertexSet{ low_mask(n) }; }

            constexpr auto mask() const -> Mask { return _members; }
            constexpr auto contains(int v) const -> bool { return _members & bit(v); }
            constexpr auto size() const -> int { return popcount(_members); }
            constexpr auto empty() const -> bool { return _members == 0; }
            auto members() const -> std::vector<int>;

            constexpr auto complement(int n) const -> VertexSet
            {
                return VertexSet{ static_cast<Mask>(low_mask(n) & ~_members) };
            }

            auto operator<=> (const VertexSet &) const = default;

        private:
            Mask _members = 0;
    };

    /// Unordered vertex pair, normalised so that u < v.
    struct Edge
    {
        int u = 0;
        int v = 0;

        auto operator<=> (const Edge &) const = default;
    };

    /// Simple undirected graph on at most max_order labelled vertices.
    class Graph
    {
        public:
            Graph() = default;

            /// Edgeless graph; order may be 0 here, but build_graph insists on at least 1.
            explicit Graph(int order);

            auto order() const -> int { return _order; }
            auto neighbours(int v) const -> Mask { return _adj[v]; }
            auto adjacent(int u, int v) const -> bool { return _adj[u] & bit(v); }
            auto degree(int v) const -> int { return popcount(_adj[v]); }
            auto edge_count() const -> int;
            auto vertices() const -> Mask { return low_mask(_order); }

            /// Edges in graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
            auto edges() const -> std::vector<Edge>;

            auto with_edge(int u, int v) const -> Graph;
            auto without_edge(int u, int v) const -> Graph;

            /// Removes v and shifts higher labels down by one.
            auto without_vertex(int v) const -> Graph;

            /// Merges v into u (u keeps the union of both neighbourhoods), then removes v.
            auto contracted(int u, int v) const -> Graph;

            /// Vertex v of this graph becomes vertex position[v] of the result.
            auto relabelled(std::span<const int> position) const -> Graph;

            auto operator== (const Graph &) const -> bool = default;

        private:
            int _order = 0;
            std::array<Mask, max_order> _adj{};

            friend auto build_graph(int, std::span<const Edge>) -> Graph;
            friend class GraphBuilder;
    };

    /// Validating constructor: order in 1..=12, no loops, no duplicate or out-of-range pairs.
    auto build_graph(int n, std::span<const Edge> edges) -> Graph;
    auto build_graph(int n, std::initializer_list<Edge> edges) -> Graph;

    /// Unchecked fast path for internal producers which already guarantee validity.
    class GraphBuilder
    {
        public:
            explicit GraphBuilder(int order) : _graph(order) { }

            auto add_edge(int u, int v) -> GraphBuilder &
            {
                _graph._adj[u] |= bit(v);
                _graph._adj[v] |= bit(u);
                return *this;
            }

            auto set_neighbours(int v, Mask m) -> GraphBuilder &
            {
                for_each_bit(m, [&] (int w) { add_edge(v, w); });
                return *this;
            }

            auto build() const -> Graph { return _graph; }

        private:
            Graph _graph;
    };

    auto complete_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto complete_bipartite(int a, int b) -> Graph;

    auto to_string(const Edge & e) -> std::string;
}

#endif
