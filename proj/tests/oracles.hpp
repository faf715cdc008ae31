#ifndef PUSHLAB_TESTS_ORACLES_HPP
#define PUSHLAB_TESTS_ORACLES_HPP

// Slow, definitional reimplementations used only to cross-check the library.

#include <pushlab/canonical.hpp>
#include <pushlab/graph.hpp>
#include <pushlab/orientation.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace oracle
{
    using pushlab::Graph;

    /// graph6-order bit string of g under labelling perm (vertex v -> perm[v]).
    auto bitstring(const Graph & g, const std::vector<int> & perm) -> std::string;

    /// Least bit string over all n! labellings.
    auto naive_canonical_bits(const Graph & g) -> std::string;

    /// Number of automorphisms, by trying every permutation.
    auto automorphism_count(const Graph & g) -> std::uint64_t;

    /// Boyer–Myrvold, via Boost.
    auto boost_planar(const Graph & g) -> bool;

    /// Arc list orientations: arcs[i] = (tail, head).
    struct Arcs
    {
        int n = 0;
        std::vector<std::pair<int, int>> arcs;
    };

    auto arcs_of(const pushlab::Orientation & d) -> Arcs;

    /// Every non-adjacent pair joined by a directed 2-path, checked from arc lists.
    auto oriented_clique(const Arcs & a) -> bool;

    /// Every push of the orientation is an oriented clique, over all 2^n vertex subsets.
    auto push_clique(const Arcs & a) -> bool;

    /// Least k admitting an oriented colouring, by trying every map V -> [k].
    auto oriented_chromatic(const Arcs & a) -> int;

    /// Least oriented chromatic number over all 2^n pushes.
    auto pushable_chromatic(const Arcs & a) -> int;

    /// Some orientation of g is a push clique, definitionally.
    auto underlying_push_clique(const Graph & g) -> bool;

    auto underlying_oriented_clique(const Graph & g) -> bool;

    /// All labelled graphs on n vertices, as graphs.
    auto all_labelled_graphs(int n) -> std::vector<Graph>;
}

#endif
