#include <pushlab/census.hpp>
#include <pushlab/canonical.hpp>
#include <pushlab/decide.hpp>
#include <pushlab/enumerate.hpp>
#include <pushlab/error.hpp>
#include <pushlab/formats.hpp>
#include <pushlab/planarity.hpp>
#include <pushlab/properties.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>

namespace pushlab
{
    auto is_edge_minimal_upc(const Graph & g) -> bool
    {
        if (! is_underlying_push_clique(g, Execution::serial).yes)
            return false;
        for (const auto & [u, v] : g.edges())
            if (is_underlying_push_clique(g.without_edge(u, v), Execution::serial).yes)
                return false;
        return true;
    }

    auto planar_upc_census(int n_max, Execution how) -> std::vector<CensusRecord>
    {
        if (n_max < 1 || n_max > max_census_order)
            throw GraphError{ "planar_upc_census supports n_max in 1..8" };

        std::vector<CensusRecord> records;
        for (int n = 1; n <= n_max; ++n) {
            auto graphs = enumerate_graphs(n, how);
            auto found = kernels::map(how, graphs, [] (const Graph & g) -> std::optional<CensusRecord> {
                if (! is_planar(g))
                    return std::nullopt;
                auto decision = is_underlying_push_clique(g, Execution::serial);
                if (! decision.yes)
                    return std::nullopt;
                CensusRecord r;
                r.order = g.order();
                r.graph = g;
                r.graph6 = write_graph6(g);
                r.minimal = is_edge_minimal_upc(g);
                r.witness = *decision.witness;
                r.witness_digraph6 = write_digraph6(r.witness);
                r.attrs.planar = true;
                r.attrs.min_degree = min_degree(g);
                r.attrs.independence_number = independence_number(g);
                r.attrs.every_edge_hamiltonian = every_edge_on_hamiltonian_cycle(g);
                return r;
            });
            for (auto & r : found)
                if (r)
                    records.push_back(std::move(*r));
        }
        return records;
    }

    auto minimal_filter(const std::vector<CensusRecord> & records) -> std::vector<CensusRecord>
    {
        std::vector<CensusRecord> result;
        for (const auto & r : records)
            if (is_edge_minimal_upc(r.graph))
                result.push_back(r);
        return result;
    }

    auto minimality_refutations(const Graph & g) -> std::vector<MinimalityRefutation>
    {
        std::vector<MinimalityRefutation> result;
        for (const auto & e : g.edges()) {
            MinimalityRefutation refutation;
            refutation.removed = e;
            Graph smaller = g.without_edge(e.u, e.v);
            refutation.pair = first_pair_lacking_common_neighbours(smaller, 2);
            if (! refutation.pair) {
                PushClassSpace space{ smaller };
                for (std::uint64_t r = 0; r < space.class_count(); ++r) {
                    auto pair = first_non_push_clique_pair(smaller, space.out_masks(r));
                    if (! pair)
                        throw Error{ "minimality_refutations: " + write_graph6(g) + " is not edge-minimal" };
                    refutation.per_class.push_back(*pair);
                }
            }
            result.push_back(std::move(refutation));
        }
        return result;
    }

    auto verify_refutation(const Graph & g, const MinimalityRefutation & refutation) -> bool
    {
        auto [x, y] = refutation.removed;
        if (! g.adjacent(x, y))
            return false;
        Graph smaller = g.without_edge(x, y);

        if (refutation.pair) {
            auto [u, v] = *refutation.pair;
            return u != v && ! smaller.adjacent(u, v) && popcount(static_cast<Mask>(smaller.neighbours(u) & smaller.neighbours(v))) < 2;
        }

        PushClassSpace space{ smaller };
        if (refutation.per_class.size() != space.class_count())
            return false;
        for (std::uint64_t r = 0; r < space.class_count(); ++r) {
            auto [u, v] = refutation.per_class[r];
            auto orientation = space.representative(r);
            if (u == v || smaller.adjacent(u, v))
                return false;
            // the pair must not both agree and disagree on common neighbours
            Mask common = static_cast<Mask>(smaller.neighbours(u) & smaller.neighbours(v));
            bool agree = false, disagree = false;
            for_each_bit(common, [&] (int w) {
                if (agree_status(orientation, u, v, w) == Agreement::agree)
                    agree = true;
                else
                    disagree = true;
            });
            if (agree && disagree)
                return false;
        }
        return true;
    }

    auto write_census_tsv(const std::vector<CensusRecord> & records) -> std::string
    {
        std::string out;
        for (const auto & r : records) {
            out += std::to_string(r.order);
            out += '\t';
            out += r.graph6;
            out += '\t';
            out += r.minimal ? '1' : '0';
            out += '\t';
            out += r.witness_digraph6;
            out += '\n';
        }
        return out;
    }

    auto parse_census_tsv(std::string_view text) -> std::vector<CensusLine>
    {
        std::vector<CensusLine> lines;
        std::istringstream in{ std::string{ text } };
        std::string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (line.empty())
                continue;
            std::vector<std::string> fields;
            std::size_t start = 0;
            for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1)
                fields.push_back(line.substr(start, tab - start));
            fields.push_back(line.substr(start));
            if (fields.size() != 4 || (fields[2] != "0" && fields[2] != "1"))
                throw FormatError{ "census line " + std::to_string(number) + ": expected order, graph6, 0/1, digraph6" };
            CensusLine parsed;
            try {
                parsed.order = std::stoi(fields[0]);
            }
            catch (const std::exception &) {
                throw FormatError{ "census line " + std::to_string(number) + ": bad order field" };
            }
            parsed.graph6 = fields[1];
            parsed.minimal = fields[2] == "1";
            parsed.witness_digraph6 = fields[3];
            lines.push_back(std::move(parsed));
        }
        return lines;
    }

    auto count_by_order(const std::vector<CensusRecord> & records) -> std::vector<int>
    {
        std::vector<int> counts(max_census_order + 1, 0);
        for (const auto & r : records)
            if (r.order >= 0 && r.order <= max_census_order)
                ++counts[r.order];
        return counts;
    }

    auto goddard_henning_graph() -> ExceptionGraph
    {
        // vertices of the drawing, left to right and bottom to top; a = 1, b = 3
        return ExceptionGraph{ build_graph(9, {
            { 0, 1 }, { 0, 7 }, { 0, 3 }, { 0, 2 },
            { 1, 8 }, { 7, 8 }, { 5, 8 }, { 6, 8 },
            { 4, 5 }, { 3, 4 }, { 4, 6 }, { 2, 4 },
            { 1, 2 }, { 1, 5 },
            { 6, 7 }, { 3, 7 } }), 1, 3 };
    }

    auto NineVertexReport::push_clique_count() const -> int
    {
        return static_cast<int>(std::count_if(triangulations.begin(), triangulations.end(),
                    [] (const Row & r) { return r.underlying_push_clique; }));
    }

    auto verify_no_planar_push_clique_on_9(Execution how) -> NineVertexReport
    {
        auto start = std::chrono::steady_clock::now();
        NineVertexReport report;
        auto triangulations = generate_triangulations(9, how);
        // the class search inside each decision is the parallel kernel here
        for (const auto & g : triangulations) {
            auto decision = is_underlying_push_clique(g, how);
            report.triangulations.push_back(NineVertexReport::Row{ g, g.edge_count(), decision.space, decision.yes });
        }
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    auto StructureReport::min_degree_two_holds() const -> bool
    {
        if (min_degree_two_minimal.size() != 1 || min_degree_two_minimal.front().order() != 6)
            return false;
        // every min-degree-2 planar push clique is the order-6 minimal graph plus edges
        const Graph & h6 = min_degree_two_minimal.front();
        return std::all_of(min_degree_two_all.begin(), min_degree_two_all.end(), [&] (const Graph & g) {
            return g.order() == 6 && contains_spanning_subgraph(g, h6);
        });
    }

    auto verify_structure(const std::vector<CensusRecord> & census, Execution how) -> StructureReport
    {
        StructureReport report;

        for (int n = 1; n <= 6; ++n) {
            auto graphs = enumerate_graphs(n, how);
            auto verdict = kernels::map(how, graphs, [] (const Graph & g) -> int {
                if (g.edge_count() == g.order() * (g.order() - 1) / 2)
                    return 0;
                if (! is_underlying_push_clique(g, Execution::serial).yes)
                    return 0;
                return has_4cycle(g) ? 1 : 2;
            });
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                if (verdict[i] > 0)
                    ++report.four_cycle_checked;
                if (verdict[i] == 2)
                    report.four_cycle_failures.push_back(graphs[i]);
            }
        }

        std::vector<const CensusRecord *> minimal;
        for (const auto & r : census)
            if (r.minimal)
                minimal.push_back(&r);

        for (const auto * r : minimal)
            if (r->order == 6 || r->order == 7) {
                ++report.hamiltonian_checked;
                if (! every_edge_on_hamiltonian_cycle(r->graph))
                    report.hamiltonian_failures.push_back(r->graph);
            }

        for (const auto & r : census)
            if (r.order >= 6 && min_degree(r.graph) == 2) {
                report.min_degree_two_all.push_back(r.graph);
                if (r.minimal)
                    report.min_degree_two_minimal.push_back(r.graph);
            }

        for (const auto & r : census) {
            ++report.cover_checked;
            bool covered = std::any_of(minimal.begin(), minimal.end(), [&] (const CensusRecord * m) {
                return m->order == r.order && contains_spanning_subgraph(r.graph, m->graph);
            });
            if (! covered)
                report.cover_failures.push_back(r.graph);
        }
        return report;
    }

    auto MinimalCoverReport::holds() const -> bool
    {
        return biconditional_checked > 0 && biconditional_failures.empty() && cover_failures.empty();
    }

    auto verify_minimal_cover(const std::vector<CensusRecord> & census, int exhaustive_max, Execution how) -> MinimalCoverReport
    {
        MinimalCoverReport report;
        report.exhaustive_max = exhaustive_max;
        report.minimal_per_order.assign(max_census_order + 1, 0);

        std::vector<Graph> minimal;
        for (const auto & r : census)
            if (r.minimal) {
                minimal.push_back(r.graph);
                ++report.minimal_per_order[r.order];
                ++report.minimal_total;
            }

        auto covered = [&] (const Graph & g) {
            return std::any_of(minimal.begin(), minimal.end(), [&] (const Graph & m) {
                return m.order() == g.order() && contains_spanning_subgraph(g, m);
            });
        };

        for (int n = 1; n <= exhaustive_max; ++n) {
            auto graphs = enumerate_graphs(n, how);
            auto agrees = kernels::map(how, graphs, [&] (const Graph & g) -> int {
                if (! is_planar(g))
                    return -1;
                bool upc = is_underlying_push_clique(g, Execution::serial).yes;
                return upc == covered(g) ? 1 : 0;
            });
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                if (agrees[i] < 0)
                    continue;
                ++report.biconditional_checked;
                if (agrees[i] == 0)
                    report.biconditional_failures.push_back(graphs[i]);
            }
        }

        for (const auto & r : census) {
            if (r.order <= exhaustive_max)
                continue;
            ++report.cover_checked;
            if (! covered(r.graph))
                report.cover_failures.push_back(r.graph);
        }
        return report;
    }

    auto census_summary(const std::vector<CensusRecord> & census, const NineVertexReport * nine_vertex,
        const MinimalCoverReport * cover, const StructureReport * structure) -> nlohmann::json
    {
        nlohmann::json summary;
        auto all = count_by_order(census);
        std::vector<int> minimal(max_census_order + 1, 0);
        for (const auto & r : census)
            if (r.minimal)
                ++minimal[r.order];

        nlohmann::json per_order = nlohmann::json::array();
        int total = 0, minimal_total = 0;
        for (int n = 1; n <= max_census_order; ++n) {
            if (all[n] == 0 && minimal[n] == 0)
                continue;
            per_order.push_back({ { "order", n }, { "planar_push_cliques", all[n] }, { "minimal", minimal[n] } });
            total += all[n];
            minimal_total += minimal[n];
        }
        summary["per_order"] = per_order;
        summary["totals"] = { { "planar_push_cliques", total }, { "minimal", minimal_total } };

        nlohmann::json minimal_graphs = nlohmann::json::array();
        for (const auto & r : census)
            if (r.minimal)
                minimal_graphs.push_back({ { "order", r.order }, { "graph6", r.graph6 }, { "witness", r.witness_digraph6 },
                    { "min_degree", r.attrs.min_degree }, { "independence_number", r.attrs.independence_number },
                    { "every_edge_hamiltonian", r.attrs.every_edge_hamiltonian } });
        summary["minimal_graphs"] = minimal_graphs;

        nlohmann::json checks = nlohmann::json::object();
        if (nine_vertex)
            checks["nine_vertices"] = { { "pass", nine_vertex->holds() && all[8] > 0 },
                { "triangulations_on_9", nine_vertex->triangulations.size() },
                { "push_cliques_on_9", nine_vertex->push_clique_count() },
                { "order8_nonempty", all[8] > 0 } };
        if (cover)
            checks["minimal_cover"] = { { "pass", cover->holds() }, { "minimal_total", cover->minimal_total },
                { "biconditional_checked", cover->biconditional_checked },
                { "cover_checked", cover->cover_checked } };
        if (structure)
            checks["structure"] = { { "pass", structure->holds() },
                { "four_cycle", structure->four_cycle_holds() },
                { "hamiltonian_edges", structure->hamiltonian_holds() },
                { "min_degree_two", structure->min_degree_two_holds() },
                { "spanning_cover", structure->cover_holds() } };
        summary["checks"] = checks;
        return summary;
    }
}
