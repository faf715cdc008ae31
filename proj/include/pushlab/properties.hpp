#ifndef PUSHLAB_PROPERTIES_HPP
#define PUSHLAB_PROPERTIES_HPP

#include <pushlab/graph.hpp>

#include <optional>
#include <vector>

namespace pushlab
{
    /// Longest shortest path; nullopt when g is disconnected.
    auto diameter(const Graph & g) -> std::optional<int>;

    /// A minimum dominating set, found by subset search in increasing size.
    auto minimum_dominating_set(const Graph & g) -> VertexSet;
    auto domination_number(const Graph & g) -> int;
    auto dominates(const Graph & g, VertexSet s) -> bool;

    auto maximum_independent_set(const Graph & g) -> VertexSet;
    auto independence_number(const Graph & g) -> int;

    /// Some two distinct vertices have at least two common neighbours.
    auto has_4cycle(const Graph & g) -> bool;

    auto has_hamiltonian_cycle_through(const Graph & g, Edge e) -> bool;
    auto every_edge_on_hamiltonian_cycle(const Graph & g) -> bool;

    auto min_degree(const Graph & g) -> int;

    /// A bijection V(h) -> V(g) mapping every edge of h onto an edge of g, if one exists.
    auto find_spanning_embedding(const Graph & g, const Graph & h) -> std::optional<std::vector<int>>;
    auto contains_spanning_subgraph(const Graph & g, const Graph & h) -> bool;

    auto is_connected(const Graph & g) -> bool;
    auto component_count(const Graph & g) -> int;
}

#endif
