#include <pushlab/graph.hpp>
#include <pushlab/error.hpp>

#include <algorithm>

namespace pushlab
{
    auto VertexSet::of(std::initializer_list<int> vertices) -> VertexSet
    {
        Mask m = 0;
        for (int v : vertices) {
            if (v < 0 || v >= max_order)
                throw GraphError{ "vertex " + std::to_string(v) + " out of range" };
            m |= bit(v);
        }
        return VertexSet{ m };
    }

    auto VertexSet::members() const -> std::vector<int>
    {
        std::vector<int> result;
        for_each_bit(_members, [&] (int v) { result.push_back(v); });
        return result;
    }

    Graph::Graph(int order) :
        _order(order)
    {
        if (order < 0 || order > max_order)
            throw GraphError{ "graph order " + std::to_string(order) + " outside 0..12" };
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (int v = 0; v < _order; ++v)
            twice += popcount(_adj[v]);
        return twice / 2;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (int v = 1; v < _order; ++v)
            for_each_bit(static_cast<Mask>(_adj[v] & low_mask(v)), [&] (int u) { result.push_back({ u, v }); });
        return result;
    }

    auto Graph::with_edge(int u, int v) const -> Graph
    {
        Graph g = *this;
        g._adj[u] |= bit(v);
        g._adj[v] |= bit(u);
        return g;
    }

    auto Graph::without_edge(int u, int v) const -> Graph
    {
        Graph g = *this;
        g._adj[u] &= static_cast<Mask>(~bit(v));
        g._adj[v] &= static_cast<Mask>(~bit(u));
        return g;
    }

    namespace
    {
        auto squeeze(Mask m, int removed) -> Mask
        {
            Mask below = m & low_mask(removed);
            Mask above = static_cast<Mask>(m >> (removed + 1)) << removed;
            return static_cast<Mask>(below | above);
        }
    }

    auto Graph::without_vertex(int v) const -> Graph
    {
        Graph g{ _order - 1 };
        for (int w = 0, x = 0; w < _order; ++w) {
            if (w == v)
                continue;
            g._adj[x++] = squeeze(_adj[w], v);
        }
        return g;
    }

    auto Graph::contracted(int u, int v) const -> Graph
    {
        Graph g = *this;
        Mask merged = static_cast<Mask>((_adj[u] | _adj[v]) & ~bit(u) & ~bit(v));
        for_each_bit(_adj[v], [&] (int w) { g._adj[w] &= static_cast<Mask>(~bit(v)); });
        g._adj[v] = 0;
        g._adj[u] = merged;
        for_each_bit(merged, [&] (int w) { g._adj[w] |= bit(u); });
        return g.without_vertex(v);
    }

    auto Graph::relabelled(std::span<const int> position) const -> Graph
    {
        Graph g{ _order };
        for (int v = 0; v < _order; ++v) {
            Mask m = 0;
            for_each_bit(_adj[v], [&] (int w) { m |= bit(position[w]); });
            g._adj[position[v]] = m;
        }
        return g;
    }

    auto build_graph(int n, std::span<const Edge> edges) -> Graph
    {
        if (n < 1 || n > max_order)
            throw GraphError{ "graph order " + std::to_string(n) + " outside 1..12" };

        Graph g{ n };
        for (const auto & e : edges) {
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
                throw GraphError{ "edge " + to_string(e) + " has a vertex out of range for order " + std::to_string(n) };
            if (e.u == e.v)
                throw GraphError{ "edge " + to_string(e) + " is a loop" };
            if (g.adjacent(e.u, e.v))
                throw GraphError{ "edge " + to_string(e) + " is a duplicate" };
            g._adj[e.u] |= bit(e.v);
            g._adj[e.v] |= bit(e.u);
        }
        return g;
    }

    auto build_graph(int n, std::initializer_list<Edge> edges) -> Graph
    {
        return build_graph(n, std::span<const Edge>{ edges.begin(), edges.size() });
    }

    auto complete_graph(int n) -> Graph
    {
        GraphBuilder b{ n };
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < v; ++u)
                b.add_edge(u, v);
        return b.build();
    }

    auto cycle_graph(int n) -> Graph
    {
        GraphBuilder b{ n };
        for (int v = 0; v < n; ++v)
            b.add_edge(v, (v + 1) % n);
        return b.build();
    }

    auto path_graph(int n) -> Graph
    {
        GraphBuilder b{ n };
        for (int v = 0; v + 1 < n; ++v)
            b.add_edge(v, v + 1);
        return b.build();
    }

    auto complete_bipartite(int a, int b) -> Graph
    {
        GraphBuilder builder{ a + b };
        for (int u = 0; u < a; ++u)
            for (int v = a; v < a + b; ++v)
                builder.add_edge(u, v);
        return builder.build();
    }

    auto to_string(const Edge & e) -> std::string
    {
        return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
    }
}
