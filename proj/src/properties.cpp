#include <pushlab/properties.hpp>

#include <algorithm>
#include <array>
#include <numeric>

namespace pushlab
{
    namespace
    {
        auto closed_neighbourhood(const Graph & g, int v) -> Mask
        {
            return static_cast<Mask>(g.neighbours(v) | bit(v));
        }

        // Visits every subset of {0..n-1} of the given size in increasing numeric order.
        template <typename F>
        auto first_subset_of_size(int n, int size, F && accept) -> std::optional<Mask>
        {
            if (size == 0)
                return accept(Mask{ 0 }) ? std::optional<Mask>{ 0 } : std::nullopt;
            // Gosper's hack
            unsigned s = (1u << size) - 1u;
            while (s < (1u << n)) {
                if (accept(static_cast<Mask>(s)))
                    return static_cast<Mask>(s);
                unsigned c = s & (0u - s);
                unsigned r = s + c;
                s = (((r ^ s) >> 2) / c) | r;
            }
            return std::nullopt;
        }
    }

    auto diameter(const Graph & g) -> std::optional<int>
    {
        int n = g.order(), result = 0;
        for (int source = 0; source < n; ++source) {
            Mask reached = bit(source), frontier = bit(source);
            int distance = 0;
            while (reached != g.vertices()) {
                Mask next = 0;
                for_each_bit(frontier, [&] (int v) { next |= g.neighbours(v); });
                next &= static_cast<Mask>(~reached);
                if (! next)
                    return std::nullopt;
                reached |= next;
                frontier = next;
                ++distance;
            }
            result = std::max(result, distance);
        }
        return result;
    }

    auto dominates(const Graph & g, VertexSet s) -> bool
    {
        Mask covered = 0;
        for_each_bit(s.mask(), [&] (int v) { covered |= closed_neighbourhood(g, v); });
        return covered == g.vertices();
    }

    auto minimum_dominating_set(const Graph & g) -> VertexSet
    {
        for (int size = 0; size <= g.order(); ++size) {
            auto found = first_subset_of_size(g.order(), size, [&] (Mask s) { return dominates(g, VertexSet{ s }); });
            if (found)
                return VertexSet{ *found };
        }
        return VertexSet::all(g.order());
    }

    auto domination_number(const Graph & g) -> int
    {
        return minimum_dominating_set(g).size();
    }

    auto maximum_independent_set(const Graph & g) -> VertexSet
    {
        // Branch on the lowest remaining vertex: take it (dropping its neighbours) or not.
        Mask best = 0;
        auto search = [&] (auto & self, Mask chosen, Mask remaining) -> void {
            if (popcount(chosen) + popcount(remaining) <= popcount(best))
                return;
            if (! remaining) {
                best = chosen;
                return;
            }
            int v = lowest(remaining);
            Mask rest = static_cast<Mask>(remaining & ~bit(v));
            self(self, static_cast<Mask>(chosen | bit(v)), static_cast<Mask>(rest & ~g.neighbours(v)));
            self(self, chosen, rest);
        };
        search(search, Mask{ 0 }, g.vertices());
        return VertexSet{ best };
    }

    auto independence_number(const Graph & g) -> int
    {
        return maximum_independent_set(g).size();
    }

    auto has_4cycle(const Graph & g) -> bool
    {
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (popcount(static_cast<Mask>(g.neighbours(u) & g.neighbours(v))) >= 2)
                    return true;
        return false;
    }

    auto has_hamiltonian_cycle_through(const Graph & g, Edge e) -> bool
    {
        int n = g.order();
        if (n < 3 || ! g.adjacent(e.u, e.v))
            return false;
        // Paths start u, v, ... and must return to u.
        auto extend = [&] (auto & self, int end, Mask visited) -> bool {
            if (visited == g.vertices())
                return g.adjacent(end, e.u);
            Mask options = static_cast<Mask>(g.neighbours(end) & ~visited);
            while (options) {
                int w = lowest(options);
                options &= static_cast<Mask>(options - 1);
                if (self(self, w, static_cast<Mask>(visited | bit(w))))
                    return true;
            }
            return false;
        };
        return extend(extend, e.v, static_cast<Mask>(bit(e.u) | bit(e.v)));
    }

    auto every_edge_on_hamiltonian_cycle(const Graph & g) -> bool
    {
        auto edges = g.edges();
        if (edges.empty())
            return false;
        return std::all_of(edges.begin(), edges.end(), [&] (const Edge & e) { return has_hamiltonian_cycle_through(g, e); });
    }

    auto min_degree(const Graph & g) -> int
    {
        int result = g.order() > 0 ? g.order() : 0;
        for (int v = 0; v < g.order(); ++v)
            result = std::min(result, g.degree(v));
        return result;
    }

    auto find_spanning_embedding(const Graph & g, const Graph & h) -> std::optional<std::vector<int>>
    {
        int n = h.order();
        if (g.order() != n || h.edge_count() > g.edge_count())
            return std::nullopt;

        // Map h's vertices in descending degree order, checking edges to mapped vertices.
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return h.degree(a) > h.degree(b); });

        std::array<int, max_order> image{};
        auto place = [&] (auto & self, int k, Mask used) -> bool {
            if (k == n)
                return true;
            int x = order[k];
            for (int y = 0; y < n; ++y) {
                if ((used & bit(y)) || g.degree(y) < h.degree(x))
                    continue;
                bool fits = true;
                for (int j = 0; j < k && fits; ++j)
                    if (h.adjacent(x, order[j]) && ! g.adjacent(y, image[order[j]]))
                        fits = false;
                if (! fits)
                    continue;
                image[x] = y;
                if (self(self, k + 1, static_cast<Mask>(used | bit(y))))
                    return true;
            }
            return false;
        };
        if (! place(place, 0, Mask{ 0 }))
            return std::nullopt;
        return std::vector<int>(image.begin(), image.begin() + n);
    }

    auto contains_spanning_subgraph(const Graph & g, const Graph & h) -> bool
    {
        return find_spanning_embedding(g, h).has_value();
    }

    auto component_count(const Graph & g) -> int
    {
        Mask seen = 0;
        int count = 0;
        for (int root = 0; root < g.order(); ++root) {
            if (seen & bit(root))
                continue;
            ++count;
            Mask frontier = bit(root);
            seen |= frontier;
            while (frontier) {
                Mask next = 0;
                for_each_bit(frontier, [&] (int v) { next |= g.neighbours(v); });
                frontier = static_cast<Mask>(next & ~seen);
                seen |= frontier;
            }
        }
        return count;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return component_count(g) == 1;
    }
}
