#ifndef PUSHLAB_ENUMERATE_HPP
#define PUSHLAB_ENUMERATE_HPP

#include <pushlab/graph.hpp>
#include <pushlab/parallel.hpp>

#include <vector>

namespace pushlab
{
    inline constexpr int max_enumeration_order = 9;

    /// One canonically labelled representative per isomorphism class of graphs on n
    /// vertices, in ascending canonical code. Orderly generation: each canonical graph on n
    /// vertices minus its last vertex is canonical on n-1, so extending every canonical
    /// (n-1)-graph by a new last vertex in all ways and keeping the canonical results yields
    /// each class exactly once. Throws GraphError unless 1 <= n <= 9.
    auto enumerate_graphs(int n, Execution how = default_execution()) -> std::vector<Graph>;

    /// One extension step: canonical children of the given canonical parents, sorted.
    auto extend_by_one_vertex(const std::vector<Graph> & parents, Execution how) -> std::vector<Graph>;
}

#endif
