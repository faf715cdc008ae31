#ifndef PUSHLAB_DECIDE_HPP
#define PUSHLAB_DECIDE_HPP

#include <pushlab/graph.hpp>
#include <pushlab/orientation.hpp>
#include <pushlab/parallel.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pushlab
{
    inline constexpr int max_orientation_edges = 24;
    inline constexpr int max_push_class_dimension = 20;

    /// g plus vertex n adjacent to every vertex of g. Throws GraphError above order 11.
    auto star_augment(const Graph & g) -> Graph;

    struct Decision
    {
        bool yes = false;

        /// First witness in enumeration order (orientation index, or push class index).
        std::optional<Orientation> witness;

        /// Orientations or classes examined (0 when a prefilter decided).
        std::uint64_t searched = 0;

        /// Size of the full search space, whether or not it was walked.
        std::uint64_t space = 0;

        /// Set when a necessary-condition prefilter rejected the graph: the least pair of
        /// non-adjacent vertices with too few common neighbours.
        std::optional<Edge> prefilter_pair;
    };

    /// Some orientation of g is an oriented clique. Walks all 2^m direction assignments
    /// (bit i of the index orients edge i low-to-high) after rejecting graphs with a
    /// non-adjacent pair that has no common neighbour. Throws BudgetError above 24 edges.
    auto is_underlying_oriented_clique(const Graph & g, Execution how = default_execution()) -> Decision;

    /// Some orientation of g is a push clique. The property is constant on push classes, so
    /// only the 2^(m-n+c) gauge-fixed representatives are walked, after rejecting graphs with
    /// a non-adjacent pair that has fewer than two common neighbours. Throws BudgetError when
    /// m - n + c exceeds 20.
    auto is_underlying_push_clique(const Graph & g, Execution how = default_execution()) -> Decision;

    /// Reference decision over all 2^m orientations rather than class representatives.
    auto is_underlying_push_clique_all_orientations(const Graph & g) -> bool;

    /// Least non-adjacent pair with fewer than `needed` common neighbours.
    auto first_pair_lacking_common_neighbours(const Graph & g, int needed) -> std::optional<Edge>;

    struct StarAugmentationReport
    {
        struct PerOrder
        {
            int order = 0;
            int classes = 0;
            int both_yes = 0;
            int both_no = 0;
        };

        std::vector<PerOrder> orders;
        std::vector<Graph> mismatches;

        auto total_classes() const -> int;
        auto holds() const -> bool { return mismatches.empty(); }
    };

    /// For every graph class of order up to n_max (at most 6): star_augment(g) is an
    /// underlying push clique exactly when g is an underlying oriented clique.
    auto verify_star_augmentation(int n_max, Execution how = default_execution()) -> StarAugmentationReport;

    /// key: value lines describing a decision.
    auto format_decision(const Graph & g, const Decision & d, const std::string & property) -> std::string;
}

#endif
