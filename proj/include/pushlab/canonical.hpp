#ifndef PUSHLAB_CANONICAL_HPP
#define PUSHLAB_CANONICAL_HPP

#include <pushlab/graph.hpp>

#include <array>
#include <compare>
#include <cstddef>
#include <functional>

namespace pushlab
{
    /// Upper-triangle adjacency in graph6 column order. Column j holds x(0,j)..x(j-1,j) with
    /// x(0,j) as the most significant bit, so comparing (order, columns...) lexicographically
    /// is the same as comparing the graph6 bit strings.
    struct CanonicalCode
    {
        int order = 0;
        std::array<Mask, max_order> columns{};

        auto operator<=> (const CanonicalCode &) const = default;
    };

    struct CanonicalForm
    {
        CanonicalCode code;

        /// perm[v] is the canonical label of vertex v.
        std::array<int, max_order> perm{};
    };

    /// Code of g under its current labelling.
    auto encode(const Graph & g) -> CanonicalCode;

    /// Graph whose identity labelling has this code.
    auto decode(const CanonicalCode & code) -> Graph;

    /// Lexicographically least code over all relabellings of g.
    auto canonical_form(const Graph & g) -> CanonicalForm;

    /// g relabelled by its canonical permutation.
    auto canonical_graph(const Graph & g) -> Graph;

    /// True iff the identity labelling of g already achieves the least code. Stops at the
    /// first strictly smaller labelling, so it is cheaper than canonical_form.
    auto is_canonical(const Graph & g) -> bool;

    auto are_isomorphic(const Graph & g, const Graph & h) -> bool;

    struct CanonicalCodeHash
    {
        auto operator() (const CanonicalCode & c) const noexcept -> std::size_t;
    };
}

#endif
