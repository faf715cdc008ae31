#include <pushlab/planarity.hpp>
#include <pushlab/canonical.hpp>
#include <pushlab/decide.hpp>
#include <pushlab/error.hpp>
#include <pushlab/properties.hpp>

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace pushlab
{
    namespace
    {
        // Deleting vertices of degree at most one, and smoothing degree-two vertices, never
        // changes planarity. The result has minimum degree three or no vertices.
        auto reduce(Graph g) -> Graph
        {
            bool changed = true;
            while (changed) {
                changed = false;
                for (int v = 0; v < g.order(); ++v) {
                    int d = g.degree(v);
                    if (d <= 1) {
                        g = g.without_vertex(v);
                        changed = true;
                        break;
                    }
                    if (d == 2) {
                        int a = lowest(g.neighbours(v));
                        int b = lowest(static_cast<Mask>(g.neighbours(v) & ~bit(a)));
                        g = g.adjacent(a, b) ? g.without_vertex(v) : g.contracted(a, v);
                        changed = true;
                        break;
                    }
                }
            }
            return g;
        }

        auto is_bipartite(const Graph & g) -> bool
        {
            std::array<int, max_order> side{};
            side.fill(-1);
            for (int root = 0; root < g.order(); ++root) {
                if (side[root] >= 0)
                    continue;
                side[root] = 0;
                Mask frontier = bit(root);
                while (frontier) {
                    int v = lowest(frontier);
                    frontier &= static_cast<Mask>(frontier - 1);
                    bool ok = true;
                    for_each_bit(g.neighbours(v), [&] (int w) {
                        if (side[w] < 0) {
                            side[w] = 1 - side[v];
                            frontier |= bit(w);
                        }
                        else if (side[w] == side[v])
                            ok = false;
                    });
                    if (! ok)
                        return false;
                }
            }
            return true;
        }

        class PlanarityMemo
        {
            public:
                auto find(const CanonicalCode & code) const -> std::optional<bool>
                {
                    std::shared_lock lock{ _mutex };
                    auto it = _known.find(code);
                    if (it == _known.end())
                        return std::nullopt;
                    return it->second;
                }

                void store(const CanonicalCode & code, bool planar)
                {
                    std::unique_lock lock{ _mutex };
                    _known.emplace(code, planar);
                }

                auto size() const -> std::size_t
                {
                    std::shared_lock lock{ _mutex };
                    return _known.size();
                }

            private:
                mutable std::shared_mutex _mutex;
                std::unordered_map<CanonicalCode, bool, CanonicalCodeHash> _known;
        };

        auto memo() -> PlanarityMemo &
        {
            static PlanarityMemo instance;
            return instance;
        }

        auto planar_reduced(const Graph & input) -> bool
        {
            Graph g = reduce(input);
            int n = g.order(), m = g.edge_count();
            if (n <= 4)
                return true;
            if (m > 3 * n - 6)
                return false;
            // K3,3 has the fewest edges of the two obstructions
            if (m < 9)
                return true;
            if (n == 6 && m == 9)
                return ! is_bipartite(g);

            auto code = canonical_form(g).code;
            if (auto known = memo().find(code))
                return *known;

            bool planar = true;
            for (const auto & [u, v] : g.edges()) {
                if (! planar_reduced(g.without_edge(u, v)) || ! planar_reduced(g.contracted(u, v))) {
                    planar = false;
                    break;
                }
            }
            memo().store(code, planar);
            return planar;
        }

        auto relabel(const RotationSystem & r, const std::array<int, max_order> & position) -> RotationSystem
        {
            std::vector<std::vector<int>> rotation(r.order());
            for (int v = 0; v < r.order(); ++v) {
                auto & target = rotation[position[v]];
                for (int w : r.rotation(v))
                    target.push_back(position[w]);
            }
            return RotationSystem{ std::move(rotation) };
        }
    }

    auto is_planar(const Graph & g) -> bool
    {
        if (g.order() > max_order)
            throw GraphError{ "is_planar supports order at most 12" };
        int n = g.order();
        if (n >= 3 && g.edge_count() > 3 * n - 6)
            return false;
        return planar_reduced(g);
    }

    auto is_outerplanar(const Graph & g) -> bool
    {
        if (g.order() > max_order - 1)
            throw GraphError{ "is_outerplanar supports order at most 11" };
        return is_planar(star_augment(g));
    }

    auto planarity_memo_size() -> std::size_t
    {
        return memo().size();
    }

    RotationSystem::RotationSystem(std::vector<std::vector<int>> rotation) :
        _rotation(std::move(rotation))
    {
        if (_rotation.size() > static_cast<std::size_t>(max_order))
            throw GraphError{ "rotation system larger than 12 vertices" };
        for (auto & around : _rotation)
            std::rotate(around.begin(), std::min_element(around.begin(), around.end()), around.end());
    }

    auto RotationSystem::graph() const -> Graph
    {
        GraphBuilder b{ order() };
        for (int v = 0; v < order(); ++v)
            for (int w : _rotation[v])
                b.add_edge(v, w);
        return b.build();
    }

    auto RotationSystem::next(int v, int w) const -> int
    {
        const auto & around = _rotation[v];
        auto it = std::find(around.begin(), around.end(), w);
        if (it == around.end())
            throw GraphError{ std::to_string(w) + " is not in the rotation of " + std::to_string(v) };
        ++it;
        return it == around.end() ? around.front() : *it;
    }

    auto RotationSystem::faces() const -> std::vector<std::vector<int>>
    {
        // darts are (v, index into rotation[v])
        std::vector<std::vector<bool>> used(order());
        for (int v = 0; v < order(); ++v)
            used[v].assign(_rotation[v].size(), false);

        std::vector<std::vector<int>> result;
        for (int v = 0; v < order(); ++v)
            for (std::size_t i = 0; i < _rotation[v].size(); ++i) {
                if (used[v][i])
                    continue;
                std::vector<int> face;
                int from = v, to = _rotation[v][i];
                std::size_t index = i;
                while (! used[from][index]) {
                    used[from][index] = true;
                    face.push_back(from);
                    int after = next(to, from);
                    from = to;
                    to = after;
                    auto & around = _rotation[from];
                    index = static_cast<std::size_t>(std::find(around.begin(), around.end(), to) - around.begin());
                }
                result.push_back(std::move(face));
            }
        return result;
    }

    auto RotationSystem::is_consistent() const -> bool
    {
        int darts = 0;
        for (int v = 0; v < order(); ++v) {
            const auto & around = _rotation[v];
            for (std::size_t i = 0; i < around.size(); ++i) {
                int w = around[i];
                if (w < 0 || w >= order() || w == v)
                    return false;
                if (std::count(around.begin(), around.end(), w) != 1)
                    return false;
                const auto & back = _rotation[w];
                if (std::count(back.begin(), back.end(), v) != 1)
                    return false;
                ++darts;
            }
        }
        Graph g = graph();
        int isolated = 0;
        for (int v = 0; v < order(); ++v)
            if (_rotation[v].empty())
                ++isolated;
        int faces_count = static_cast<int>(faces().size()) + isolated;
        return order() - darts / 2 + faces_count == 2 * component_count(g);
    }

    auto RotationSystem::is_triangulation() const -> bool
    {
        if (! is_consistent())
            return false;
        auto all = faces();
        return std::all_of(all.begin(), all.end(), [] (const auto & f) { return f.size() == 3; });
    }

    auto RotationSystem::flipped(Edge e) const -> std::optional<RotationSystem>
    {
        auto [u, v] = e;
        // triangles u -> v -> a and v -> u -> b
        int a = next(v, u);
        int b = next(u, v);
        if (a == b || a == u || b == v)
            return std::nullopt;
        const auto & around_a = _rotation[a];
        if (std::find(around_a.begin(), around_a.end(), b) != around_a.end())
            return std::nullopt;

        auto rotation = _rotation;
        auto erase = [&] (int x, int y) {
            auto & r = rotation[x];
            r.erase(std::find(r.begin(), r.end(), y));
        };
        auto insert_after = [&] (int x, int after, int y) {
            auto & r = rotation[x];
            r.insert(std::find(r.begin(), r.end(), after) + 1, y);
        };
        erase(u, v);
        erase(v, u);
        insert_after(a, v, b);
        insert_after(b, u, a);
        return RotationSystem{ std::move(rotation) };
    }

    auto RotationSystem::with_vertex_in_face(int u, int v, int w) const -> RotationSystem
    {
        if (next(v, u) != w || next(w, v) != u || next(u, w) != v)
            throw GraphError{ "with_vertex_in_face: not a triangular face" };
        auto rotation = _rotation;
        int x = order();
        auto insert_after = [&] (int at, int after, int y) {
            auto & r = rotation[at];
            r.insert(std::find(r.begin(), r.end(), after) + 1, y);
        };
        insert_after(v, u, x);
        insert_after(w, v, x);
        insert_after(u, w, x);
        rotation.push_back({ v, u, w });
        return RotationSystem{ std::move(rotation) };
    }

    auto flip(const RotationSystem & r, Edge e) -> RotationSystem
    {
        auto result = r.flipped(e);
        if (! result)
            throw GraphError{ "flip of " + to_string(e) + " would create a multiple edge" };
        return *result;
    }

    auto stacked_triangulation(int n) -> RotationSystem
    {
        if (n < 4 || n > max_order)
            throw GraphError{ "stacked_triangulation needs 4..12 vertices" };
        // K4: vertex 3 inside the triangle 0, 1, 2
        RotationSystem r{ { { 1, 3, 2 }, { 2, 3, 0 }, { 0, 3, 1 }, { 0, 1, 2 } } };
        while (r.order() < n) {
            auto face = r.faces().back();
            r = r.with_vertex_in_face(face[0], face[1], face[2]);
        }
        return r;
    }

    namespace
    {
        auto flip_closure(std::vector<RotationSystem> seeds, Execution how) -> std::vector<EmbeddedTriangulation>
        {
            std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
            std::vector<EmbeddedTriangulation> found;
            std::vector<RotationSystem> frontier;

            auto admit = [&] (const RotationSystem & r, const CanonicalForm & form) {
                if (! seen.insert(form.code).second)
                    return;
                found.push_back(EmbeddedTriangulation{ decode(form.code), relabel(r, form.perm) });
                frontier.push_back(r);
            };
            for (const auto & r : seeds)
                admit(r, canonical_form(r.graph()));

            while (! frontier.empty()) {
                auto current = std::move(frontier);
                frontier.clear();
                auto neighbours = kernels::map(how, current, [] (const RotationSystem & r) {
                    std::vector<std::pair<RotationSystem, CanonicalForm>> result;
                    for (const auto & e : r.graph().edges())
                        if (auto f = r.flipped(e))
                            result.emplace_back(*f, canonical_form(f->graph()));
                    return result;
                });
                for (const auto & batch : neighbours)
                    for (const auto & [r, form] : batch)
                        admit(r, form);
            }

            std::sort(found.begin(), found.end(), [] (const auto & a, const auto & b) {
                return encode(a.graph) < encode(b.graph);
            });
            return found;
        }

        void check_triangulation_order(int n)
        {
            if (n < 4 || n > 9)
                throw GraphError{ "triangulation generation supports 4..9 vertices, got " + std::to_string(n) };
        }
    }

    auto generate_embedded_triangulations(int n, Execution how) -> std::vector<EmbeddedTriangulation>
    {
        check_triangulation_order(n);
        return flip_closure({ stacked_triangulation(n) }, how);
    }

    auto generate_triangulations(int n, Execution how) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        for (auto & t : generate_embedded_triangulations(n, how))
            result.push_back(t.graph);
        return result;
    }

    auto generate_triangulations_by_insertion(int n) -> std::vector<Graph>
    {
        check_triangulation_order(n);
        std::vector<EmbeddedTriangulation> level{ { complete_graph(4), stacked_triangulation(4) } };
        for (int k = 5; k <= n; ++k) {
            std::vector<RotationSystem> seeds;
            for (const auto & t : level)
                for (const auto & face : t.embedding.faces())
                    seeds.push_back(t.embedding.with_vertex_in_face(face[0], face[1], face[2]));
            level = flip_closure(std::move(seeds), Execution::serial);
        }
        std::vector<Graph> result;
        for (auto & t : level)
            result.push_back(t.graph);
        return result;
    }
}
