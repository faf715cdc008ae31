#include <doctest.h>

#include <pushlab/canonical.hpp>
#include <pushlab/census.hpp>
#include <pushlab/decide.hpp>
#include <pushlab/enumerate.hpp>
#include <pushlab/error.hpp>
#include <pushlab/graph.hpp>
#include <pushlab/planarity.hpp>
#include <pushlab/properties.hpp>

#include "oracles.hpp"

using namespace pushlab;

TEST_CASE("planarity examples")
{
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
    CHECK(is_planar(complete_graph(4)));
    CHECK(is_planar(complete_bipartite(2, 5)));
    CHECK(is_planar(goddard_henning_graph().graph));
    CHECK(is_planar(Graph{ 12 }));
    // Petersen graph
    auto petersen = build_graph(10, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 0 }, { 0, 5 }, { 1, 6 }, { 2, 7 }, { 3, 8 }, { 4, 9 },
                                      { 5, 7 }, { 7, 9 }, { 9, 6 }, { 6, 8 }, { 8, 5 } });
    CHECK_FALSE(is_planar(petersen));
    CHECK(is_planar(petersen.without_vertex(0).without_vertex(0)) == oracle::boost_planar(petersen.without_vertex(0).without_vertex(0)));
}

TEST_CASE("planarity agrees with Boyer-Myrvold on every graph up to order 7")
{
    std::vector<int> planar_counts{ 0, 1, 2, 4, 11, 33, 142, 822 };
    for (int n = 1; n <= 7; ++n) {
        int planar = 0;
        for (const auto & g : enumerate_graphs(n)) {
            bool ours = is_planar(g);
            CHECK(ours == oracle::boost_planar(g));
            planar += ours;
            if (n >= 3 && g.edge_count() > 3 * n - 6)
                CHECK_FALSE(ours);
        }
        CHECK(planar == planar_counts[n]);
    }
    CHECK(planarity_memo_size() > 0);
}

TEST_CASE("outerplanarity")
{
    CHECK(is_outerplanar(cycle_graph(4)));
    CHECK_FALSE(is_outerplanar(complete_graph(4)));
    CHECK_FALSE(is_outerplanar(complete_bipartite(2, 3)));
    CHECK(is_outerplanar(path_graph(7)));
    CHECK_THROWS_AS(is_outerplanar(Graph{ 12 }), GraphError);
    for (const auto & g : enumerate_graphs(6))
        CHECK(is_outerplanar(g) == oracle::boost_planar(star_augment(g)));
}

TEST_CASE("rotation systems")
{
    auto k4 = stacked_triangulation(4);
    CHECK(k4.is_consistent());
    CHECK(k4.is_triangulation());
    CHECK(k4.graph() == complete_graph(4));
    CHECK(k4.faces().size() == 4);
    for (auto [u, v] : complete_graph(4).edges()) {
        CHECK_FALSE(k4.flipped({ u, v }).has_value());
        CHECK_THROWS_AS(flip(k4, { u, v }), GraphError);
    }

    for (int n = 4; n <= 10; ++n) {
        auto r = stacked_triangulation(n);
        CHECK(r.is_triangulation());
        CHECK(r.graph().edge_count() == 3 * n - 6);
        CHECK(oracle::boost_planar(r.graph()));
    }

    // a plane 4-cycle is consistent but not a triangulation
    RotationSystem square{ { { 1, 3 }, { 2, 0 }, { 3, 1 }, { 0, 2 } } };
    CHECK(square.is_consistent());
    CHECK_FALSE(square.is_triangulation());
}

TEST_CASE("flips on the octahedron")
{
    std::vector<Graph> six = generate_triangulations(6);
    REQUIRE(six.size() == 2);
    std::optional<EmbeddedTriangulation> octahedron;
    for (const auto & t : generate_embedded_triangulations(6))
        if (min_degree(t.graph) == 4)
            octahedron = t;
    REQUIRE(octahedron.has_value());
    for (auto e : octahedron->graph.edges()) {
        auto flipped = flip(octahedron->embedding, e);
        CHECK(flipped.is_triangulation());
        CHECK(min_degree(flipped.graph()) == 3);
        auto c = canonical_graph(flipped.graph());
        CHECK((c == six[0] || c == six[1]));
        // flipping the new diagonal restores the octahedron
        Edge added{};
        for (auto f : flipped.graph().edges())
            if (! octahedron->graph.adjacent(f.u, f.v))
                added = f;
        CHECK(flip(flipped, added) == octahedron->embedding);
    }
}

TEST_CASE("triangulation counts by two routes")
{
    std::vector<std::size_t> expected{ 0, 0, 0, 0, 1, 1, 2, 5, 14, 50 };
    for (int n = 4; n <= 9; ++n) {
        auto flips = generate_triangulations(n);
        CHECK(flips.size() == expected[n]);
        CHECK(flips == generate_triangulations_by_insertion(n));
        for (const auto & g : flips) {
            CHECK(g.edge_count() == 3 * n - 6);
            CHECK(oracle::boost_planar(g));
        }
    }
    CHECK(generate_triangulations(8, Execution::serial) == generate_triangulations(8, Execution::parallel));
    CHECK_THROWS_AS(generate_triangulations(3), GraphError);
    CHECK_THROWS_AS(generate_triangulations(10), GraphError);
}

TEST_CASE("maximal planar graphs are exactly the planar graphs with 3n-6 edges")
{
    for (int n = 4; n <= 7; ++n) {
        std::vector<Graph> maximal;
        for (const auto & g : enumerate_graphs(n))
            if (g.edge_count() == 3 * n - 6 && oracle::boost_planar(g))
                maximal.push_back(g);
        CHECK(maximal == generate_triangulations(n));
    }
}
