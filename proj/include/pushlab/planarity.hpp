#ifndef PUSHLAB_PLANARITY_HPP
#define PUSHLAB_PLANARITY_HPP

#include <pushlab/graph.hpp>
#include <pushlab/parallel.hpp>

#include <optional>
#include <vector>

namespace pushlab
{
    /// Exact: no K5 or K3,3 minor. Low-degree vertices are removed or smoothed first (both
    /// preserve planarity either way), then every single-edge deletion and contraction is
    /// searched, memoised on canonical codes. Throws GraphError above order 12.
    auto is_planar(const Graph & g) -> bool;

    /// g plus a universal vertex is planar. Throws GraphError above order 11.
    auto is_outerplanar(const Graph & g) -> bool;

    /// Number of reduced graphs the planarity memo currently holds.
    auto planarity_memo_size() -> std::size_t;

    /// A combinatorial embedding: rotation[v] lists the neighbours of v in cyclic order. Faces
    /// are traced by following dart u->v with v->w, where w follows u in rotation[v].
    /// Each list is stored starting at its smallest neighbour, so equal embeddings compare equal.
    class RotationSystem
    {
        public:
            RotationSystem() = default;
            explicit RotationSystem(std::vector<std::vector<int>> rotation);

            auto order() const -> int { return static_cast<int>(_rotation.size()); }
            auto rotation(int v) const -> const std::vector<int> & { return _rotation[v]; }
            auto graph() const -> Graph;

            /// Neighbour after w in the rotation at v.
            auto next(int v, int w) const -> int;

            auto faces() const -> std::vector<std::vector<int>>;

            /// Every edge appears at both ends, and V - E + F = 2 * components.
            auto is_consistent() const -> bool;

            /// Every face is a triangle and the embedding is consistent.
            auto is_triangulation() const -> bool;

            /// Replaces the edge by the other diagonal of its two triangles; nullopt when the
            /// far corners are already adjacent (the result would not be simple).
            auto flipped(Edge e) const -> std::optional<RotationSystem>;

            /// Adds a new vertex inside the triangular face u -> v -> w.
            auto with_vertex_in_face(int u, int v, int w) const -> RotationSystem;

            auto operator== (const RotationSystem &) const -> bool = default;

        private:
            std::vector<std::vector<int>> _rotation;
    };

    /// Checked flip: throws GraphError if the flip is rejected.
    auto flip(const RotationSystem & r, Edge e) -> RotationSystem;

    /// K4 with further vertices stacked into faces, an embedded triangulation on n >= 4.
    auto stacked_triangulation(int n) -> RotationSystem;

    struct EmbeddedTriangulation
    {
        Graph graph;
        RotationSystem embedding;
    };

    /// Maximal planar graphs on n vertices (4 <= n <= 9), one per isomorphism class, in
    /// ascending canonical code: breadth-first closure under diagonal flips from the stacked
    /// triangulation. Throws GraphError outside that range.
    auto generate_triangulations(int n, Execution how = default_execution()) -> std::vector<Graph>;
    auto generate_embedded_triangulations(int n, Execution how = default_execution()) -> std::vector<EmbeddedTriangulation>;

    /// Independent route: a new vertex in every face of every (n-1)-triangulation from this
    /// same route, then flip closure. Used to cross-check generate_triangulations.
    auto generate_triangulations_by_insertion(int n) -> std::vector<Graph>;
}

#endif
