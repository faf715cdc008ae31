#include <doctest.h>

#include <pushlab/canonical.hpp>
#include <pushlab/census.hpp>
#include <pushlab/decide.hpp>
#include <pushlab/enumerate.hpp>
#include <pushlab/error.hpp>
#include <pushlab/formats.hpp>
#include <pushlab/planarity.hpp>
#include <pushlab/properties.hpp>

#include "oracles.hpp"

#include <fstream>
#include <set>
#include <sstream>

using namespace pushlab;

namespace
{
    auto census() -> const std::vector<CensusRecord> &
    {
        static const auto records = planar_upc_census(max_census_order);
        return records;
    }

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in{ path };
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
}

TEST_CASE("census matches the golden file bit for bit")
{
    auto golden = read_file(PUSHLAB_TEST_DATA "/census_golden.tsv");
    REQUIRE_FALSE(golden.empty());
    CHECK(write_census_tsv(census()) == golden);
    auto lines = parse_census_tsv(golden);
    CHECK(lines.size() == census().size());
}

TEST_CASE("census is deterministic across execution modes")
{
    auto serial = planar_upc_census(7, Execution::serial);
    auto parallel = planar_upc_census(7, Execution::parallel);
    CHECK(write_census_tsv(serial) == write_census_tsv(parallel));
}

TEST_CASE("census against an independent labelled-graph sweep")
{
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> expected;
        for (const auto & g : oracle::all_labelled_graphs(n))
            if (oracle::boost_planar(g) && oracle::underlying_push_clique(g))
                expected.insert(write_graph6(canonical_graph(g)));
        std::set<std::string> ours;
        for (const auto & r : census())
            if (r.order == n)
                ours.insert(r.graph6);
        CHECK(ours == expected);
    }
}

TEST_CASE("census records are internally consistent")
{
    for (const auto & r : census()) {
        CHECK(r.order == r.graph.order());
        CHECK(write_graph6(r.graph) == r.graph6);
        CHECK(is_canonical(r.graph));
        CHECK(is_planar(r.graph));
        CHECK(is_push_clique(r.witness));
        CHECK(r.witness.base() == r.graph);
        CHECK(parse_digraph6(r.witness_digraph6) == r.witness);
        CHECK(r.minimal == is_edge_minimal_upc(r.graph));
        CHECK(r.attrs.min_degree == min_degree(r.graph));
        CHECK(r.attrs.independence_number == independence_number(r.graph));
    }
}

TEST_CASE("census membership examples")
{
    auto has = [] (const Graph & g) {
        auto code = write_graph6(canonical_graph(g));
        for (const auto & r : census())
            if (r.graph6 == code)
                return true;
        return false;
    };
    CHECK(has(cycle_graph(4)));
    CHECK(has(cycle_graph(4).with_edge(0, 2)));
    CHECK(has(complete_graph(4)));
    CHECK(has(cycle_graph(5).with_edge(0, 2).with_edge(1, 3)));
    CHECK_FALSE(has(cycle_graph(5)));
    CHECK_FALSE(has(complete_bipartite(2, 3)));

    auto counts = count_by_order(census());
    CHECK(counts[4] == 3);
    CHECK(counts[8] > 0);
}

TEST_CASE("minimal census counts")
{
    auto minimal = minimal_filter(census());
    auto counts = count_by_order(minimal);
    // regression values; cross-checked by a definitional all-orientations, all-pushes sweep
    CHECK(counts == std::vector<int>{ 0, 1, 1, 1, 1, 1, 4, 4, 3 });
    for (const auto & r : minimal)
        CHECK(r.minimal);
    for (const auto & r : census())
        if (r.order == 5)
            CHECK(r.minimal == are_isomorphic(r.graph, cycle_graph(5).with_edge(0, 2).with_edge(1, 3)));
}

TEST_CASE("minimality refutations verify")
{
    for (const auto & r : minimal_filter(census())) {
        auto refutations = minimality_refutations(r.graph);
        CHECK(refutations.size() == static_cast<std::size_t>(r.graph.edge_count()));
        for (const auto & refutation : refutations)
            CHECK(verify_refutation(r.graph, refutation));
    }
    // a non-minimal graph has an edge whose removal leaves a push clique
    auto k4 = complete_graph(4);
    CHECK_FALSE(is_edge_minimal_upc(k4));
    MinimalityRefutation bogus{ { 0, 1 }, std::nullopt, { } };
    CHECK_FALSE(verify_refutation(k4, bogus));
}

TEST_CASE("golden file parsing rejects malformed lines")
{
    CHECK_THROWS_AS(parse_census_tsv("4\tCr\t1\n"), FormatError);
    CHECK_THROWS_AS(parse_census_tsv("x\tCr\t1\t&C?\n"), FormatError);
    CHECK_THROWS_AS(parse_census_tsv("4\tCr\t2\t&C?\n"), FormatError);
    CHECK(parse_census_tsv("").empty());
}

TEST_CASE("the nine-vertex exception graph")
{
    auto [g, a, b] = goddard_henning_graph();
    CHECK(g.order() == 9);
    CHECK(g.edge_count() == 16);
    CHECK(diameter(g) == 2);
    CHECK(domination_number(g) == 3);
    CHECK(is_planar(g));
    CHECK(oracle::boost_planar(g));
    CHECK_FALSE(g.adjacent(a, b));
    CHECK(popcount(static_cast<Mask>(g.neighbours(a) & g.neighbours(b))) == 1);
    auto decision = is_underlying_push_clique(g);
    CHECK_FALSE(decision.yes);
    CHECK(decision.prefilter_pair.has_value());
}

TEST_CASE("no nine-vertex planar push clique")
{
    auto report = verify_no_planar_push_clique_on_9();
    CHECK(report.triangulations.size() == 50);
    for (const auto & row : report.triangulations) {
        CHECK(row.edges == 21);
        CHECK(row.push_classes == 8192);
    }
    CHECK(report.push_clique_count() == 0);
    CHECK(report.holds());
}

TEST_CASE("spanning cover")
{
    auto report = verify_minimal_cover(census(), 5);
    CHECK(report.biconditional_failures.empty());
    CHECK(report.cover_failures.empty());
    CHECK(report.minimal_total == 16);
}

TEST_CASE("summary json")
{
    auto j = census_summary(census(), nullptr, nullptr, nullptr);
    CHECK(j["totals"]["minimal"] == 16);
    CHECK(j["per_order"].size() == 8);
    CHECK(j.dump() == census_summary(census(), nullptr, nullptr, nullptr).dump());
}

TEST_CASE("structure of the census")
{
    auto report = verify_structure(census());
    CHECK(report.four_cycle_holds());
    CHECK(report.four_cycle_checked > 0);
    CHECK(report.cover_holds());
    // two minimal graphs have an edge on no Hamiltonian cycle
    std::set<std::string> failing;
    for (const auto & g : report.hamiltonian_failures) {
        failing.insert(write_graph6(g));
        CHECK_FALSE(every_edge_on_hamiltonian_cycle(g));
    }
    CHECK(failing == std::set<std::string>{ "EB~o", "F@r~o" });
    REQUIRE(report.min_degree_two_minimal.size() == 1);
    CHECK(write_graph6(report.min_degree_two_minimal.front()) == "EB~o");
    CHECK(report.min_degree_two_all.size() == 2);
    CHECK(report.min_degree_two_holds());
}
