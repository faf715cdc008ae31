#ifndef PUSHLAB_CENSUS_HPP
#define PUSHLAB_CENSUS_HPP

#include <pushlab/graph.hpp>
#include <pushlab/orientation.hpp>
#include <pushlab/parallel.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace pushlab
{
    inline constexpr int max_census_order = 8;

    struct CensusAttributes
    {
        bool planar = true;
        int min_degree = 0;
        int independence_number = 0;
        bool every_edge_hamiltonian = false;
    };

    /// A planar underlying push clique, canonically labelled.
    struct CensusRecord
    {
        int order = 0;
        Graph graph;
        std::string graph6;
        bool minimal = false;
        Orientation witness;
        std::string witness_digraph6;
        CensusAttributes attrs;
    };

    /// All planar underlying push cliques of orders 1..n_max (n_max <= 8), ordered by order
    /// and then canonical code, each with its minimality flag and first push-clique witness.
    auto planar_upc_census(int n_max, Execution how = default_execution()) -> std::vector<CensusRecord>;

    /// g is an underlying push clique and no single edge can be removed keeping it one.
    auto is_edge_minimal_upc(const Graph & g) -> bool;

    /// Records that are minimal under spanning-subgraph inclusion.
    auto minimal_filter(const std::vector<CensusRecord> & records) -> std::vector<CensusRecord>;

    /// Why g - removed is not an underlying push clique. pair, when present, is a
    /// non-adjacent pair with fewer than two common neighbours, which no orientation can put on
    /// a special 4-cycle. Otherwise per_class[r] is a failing pair of push class r.
    struct MinimalityRefutation
    {
        Edge removed;
        std::optional<Edge> pair;
        std::vector<Edge> per_class;
    };

    auto minimality_refutations(const Graph & g) -> std::vector<MinimalityRefutation>;

    /// Independently re-checks a refutation against g.
    auto verify_refutation(const Graph & g, const MinimalityRefutation & refutation) -> bool;

    /// Golden file: order, graph6, minimal flag (0/1), witness digraph6, tab separated.
    auto write_census_tsv(const std::vector<CensusRecord> & records) -> std::string;

    struct CensusLine
    {
        int order = 0;
        std::string graph6;
        bool minimal = false;
        std::string witness_digraph6;
    };

    /// Throws FormatError on malformed lines.
    auto parse_census_tsv(std::string_view text) -> std::vector<CensusLine>;

    /// Counts indexed by order 0..8.
    auto count_by_order(const std::vector<CensusRecord> & records) -> std::vector<int>;

    /// The nine-vertex planar graph of diameter two and domination number three, with its two
    /// marked vertices.
    struct ExceptionGraph
    {
        Graph graph;
        int a = 1;
        int b = 3;
    };

    auto goddard_henning_graph() -> ExceptionGraph;

    struct NineVertexReport
    {
        struct Row
        {
            Graph graph;
            int edges = 0;
            std::uint64_t push_classes = 0;
            bool underlying_push_clique = false;
        };

        std::vector<Row> triangulations;
        double seconds = 0.0;

        auto push_clique_count() const -> int;
        auto holds() const -> bool { return ! triangulations.empty() && push_clique_count() == 0; }
    };

    /// No maximal planar graph on nine vertices is an underlying push clique; since every
    /// planar graph is a spanning subgraph of a maximal one, none on nine vertices is.
    auto verify_no_planar_push_clique_on_9(Execution how = default_execution()) -> NineVertexReport;

    struct StructureReport
    {
        /// every non-complete underlying push clique of order <= 6 has a 4-cycle
        int four_cycle_checked = 0;
        std::vector<Graph> four_cycle_failures;

        /// minimal graphs of order 6 and 7 with every edge on a Hamiltonian cycle
        int hamiltonian_checked = 0;
        std::vector<Graph> hamiltonian_failures;

        /// planar underlying push cliques of order >= 6 with minimum degree 2
        std::vector<Graph> min_degree_two_all;
        std::vector<Graph> min_degree_two_minimal;

        /// census records not spanning-containing a minimal graph of their order
        int cover_checked = 0;
        std::vector<Graph> cover_failures;

        auto four_cycle_holds() const -> bool { return four_cycle_failures.empty(); }
        auto hamiltonian_holds() const -> bool { return hamiltonian_checked > 0 && hamiltonian_failures.empty(); }
        auto min_degree_two_holds() const -> bool;
        auto cover_holds() const -> bool { return cover_checked > 0 && cover_failures.empty(); }
        auto holds() const -> bool { return four_cycle_holds() && hamiltonian_holds() && min_degree_two_holds() && cover_holds(); }
    };

    auto verify_structure(const std::vector<CensusRecord> & census, Execution how = default_execution()) -> StructureReport;

    struct MinimalCoverReport
    {
        std::vector<int> minimal_per_order;
        int minimal_total = 0;

        /// planar graphs of order <= exhaustive_max checked for: underlying push clique iff
        /// spanning-contains a minimal graph of the same order
        int exhaustive_max = 0;
        int biconditional_checked = 0;
        std::vector<Graph> biconditional_failures;

        /// census records of larger orders checked for the forward direction
        int cover_checked = 0;
        std::vector<Graph> cover_failures;

        auto holds() const -> bool;
    };

    auto verify_minimal_cover(const std::vector<CensusRecord> & census, int exhaustive_max = 6, Execution how = default_execution()) -> MinimalCoverReport;

    auto census_summary(const std::vector<CensusRecord> & census, const NineVertexReport * nine_vertex,
        const MinimalCoverReport * cover, const StructureReport * structure) -> nlohmann::json;
}

#endif
