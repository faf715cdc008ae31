#include <pushlab/decide.hpp>
#include <pushlab/enumerate.hpp>
#include <pushlab/error.hpp>
#include <pushlab/formats.hpp>
#include <pushlab/properties.hpp>

#include <sstream>

namespace pushlab
{
    auto star_augment(const Graph & g) -> Graph
    {
        int n = g.order();
        if (n > max_order - 1)
            throw GraphError{ "star_augment needs order at most 11, got " + std::to_string(n) };
        GraphBuilder b{ n + 1 };
        for (int v = 0; v < n; ++v) {
            b.set_neighbours(v, g.neighbours(v));
            b.add_edge(v, n);
        }
        return b.build();
    }

    auto first_pair_lacking_common_neighbours(const Graph & g, int needed) -> std::optional<Edge>
    {
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (! g.adjacent(u, v) && popcount(static_cast<Mask>(g.neighbours(u) & g.neighbours(v))) < needed)
                    return Edge{ u, v };
        return std::nullopt;
    }

    namespace
    {
        auto orientation_masks(const std::vector<Edge> & edges, std::uint64_t index) -> OutMasks
        {
            OutMasks out{};
            for (std::size_t i = 0; i < edges.size(); ++i) {
                auto [u, v] = edges[i];
                if ((index >> i) & 1u)
                    out[u] |= bit(v);
                else
                    out[v] |= bit(u);
            }
            return out;
        }
    }

    auto is_underlying_oriented_clique(const Graph & g, Execution how) -> Decision
    {
        auto edges = g.edges();
        if (static_cast<int>(edges.size()) > max_orientation_edges)
            throw BudgetError{ "orientation search over " + std::to_string(edges.size()) + " edges exceeds the budget of "
                + std::to_string(max_orientation_edges) };

        Decision decision;
        decision.space = std::uint64_t{ 1 } << edges.size();
        if (auto pair = first_pair_lacking_common_neighbours(g, 1)) {
            decision.prefilter_pair = pair;
            return decision;
        }

        auto hit = kernels::first_index(how, decision.space, [&] (std::uint64_t index) {
            return ! first_non_oriented_clique_pair(g, orientation_masks(edges, index)).has_value();
        });
        decision.searched = hit ? *hit + 1 : decision.space;
        if (hit) {
            decision.yes = true;
            decision.witness = orientation_from_index(g, *hit);
        }
        return decision;
    }

    auto is_underlying_push_clique(const Graph & g, Execution how) -> Decision
    {
        PushClassSpace space{ g };
        if (space.dimension() > max_push_class_dimension)
            throw BudgetError{ "push class search over 2^" + std::to_string(space.dimension()) + " classes exceeds the budget of 2^"
                + std::to_string(max_push_class_dimension) };

        Decision decision;
        decision.space = space.class_count();
        if (auto pair = first_pair_lacking_common_neighbours(g, 2)) {
            decision.prefilter_pair = pair;
            return decision;
        }

        auto hit = kernels::first_index(how, decision.space, [&] (std::uint64_t index) {
            return ! first_non_push_clique_pair(g, space.out_masks(index)).has_value();
        });
        decision.searched = hit ? *hit + 1 : decision.space;
        if (hit) {
            decision.yes = true;
            decision.witness = space.representative(*hit);
        }
        return decision;
    }

    auto is_underlying_push_clique_all_orientations(const Graph & g) -> bool
    {
        auto edges = g.edges();
        if (static_cast<int>(edges.size()) > max_orientation_edges)
            throw BudgetError{ "orientation search exceeds the edge budget" };
        for (std::uint64_t index = 0; index < (std::uint64_t{ 1 } << edges.size()); ++index)
            if (! first_non_push_clique_pair(g, orientation_masks(edges, index)))
                return true;
        return false;
    }

    auto StarAugmentationReport::total_classes() const -> int
    {
        int total = 0;
        for (const auto & o : orders)
            total += o.classes;
        return total;
    }

    auto verify_star_augmentation(int n_max, Execution how) -> StarAugmentationReport
    {
        if (n_max < 1 || n_max > 6)
            throw GraphError{ "verify_star_augmentation supports n_max in 1..6" };

        StarAugmentationReport report;
        for (int n = 1; n <= n_max; ++n) {
            auto graphs = enumerate_graphs(n, how);
            // per graph: 0 both no, 1 both yes, 2 mismatch
            auto outcome = kernels::map(how, graphs, [] (const Graph & g) -> int {
                bool oriented = is_underlying_oriented_clique(g, Execution::serial).yes;
                bool pushed = is_underlying_push_clique(star_augment(g), Execution::serial).yes;
                return oriented != pushed ? 2 : (oriented ? 1 : 0);
            });
            StarAugmentationReport::PerOrder row{ n, static_cast<int>(graphs.size()), 0, 0 };
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                if (outcome[i] == 2)
                    report.mismatches.push_back(graphs[i]);
                else if (outcome[i] == 1)
                    ++row.both_yes;
                else
                    ++row.both_no;
            }
            report.orders.push_back(row);
        }
        return report;
    }

    auto format_decision(const Graph & g, const Decision & d, const std::string & property) -> std::string
    {
        std::ostringstream out;
        out << "graph: " << write_graph6(g) << '\n'
            << "order: " << g.order() << '\n'
            << "property: " << property << '\n'
            << "space: " << d.space << '\n'
            << "searched: " << d.searched << '\n'
            << "decision: " << (d.yes ? "yes" : "no") << '\n';
        if (d.prefilter_pair)
            out << "prefilter_pair: " << d.prefilter_pair->u << ' ' << d.prefilter_pair->v << '\n';
        if (d.witness)
            out << "witness: " << write_digraph6(*d.witness) << '\n';
        return out.str();
    }
}
