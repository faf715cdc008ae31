#include <doctest.h>

#include <pushlab/enumerate.hpp>
#include <pushlab/error.hpp>
#include <pushlab/graph.hpp>
#include <pushlab/orientation.hpp>
#include <pushlab/properties.hpp>

#include "oracles.hpp"

#include <map>
#include <set>

using namespace pushlab;

namespace
{
    // a=0, b=1, c=2, d=3 with a->b, b->c, c->d, a->d
    auto special_4cycle() -> Orientation
    {
        return Orientation::from_out_masks(cycle_graph(4), OutMasks{ 0b1010, 0b0100, 0b1000, 0b0000 });
    }

    auto two_path() -> Orientation
    {
        // u=0 -> w=1 -> v=2
        return Orientation::from_out_masks(path_graph(3), OutMasks{ 0b010, 0b100, 0 });
    }
}

TEST_CASE("orientations from bits and masks")
{
    auto g = path_graph(3);
    bool bits[] = { true, false };
    auto d = orient(g, bits);
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(2, 1));
    CHECK(d.direction_bits() == std::vector<bool>{ true, false });
    CHECK(d == orientation_from_index(g, 1));
    CHECK(d.in_neighbours(1) == 0b101);

    bool short_bits[] = { true };
    CHECK_THROWS_AS(orient(g, short_bits), GraphError);
    CHECK_THROWS_AS(Orientation::from_out_masks(g, OutMasks{ 0b010, 0b001, 0 }), GraphError);
    CHECK_THROWS_AS(Orientation::from_out_masks(g, OutMasks{ 0b100, 0b100, 0 }), GraphError);
}

TEST_CASE("push basics")
{
    auto d = special_4cycle();
    CHECK(push(d, VertexSet{}) == d);
    CHECK(push(d, VertexSet::all(4)) == d);
    for (int v = 0; v < 4; ++v)
        CHECK(push(push(d, VertexSet::of({ v })), VertexSet::of({ v })) == d);

    auto pushed = push(d, VertexSet::of({ 1 }));
    CHECK(pushed.has_arc(1, 0));
    CHECK(pushed.has_arc(2, 1));
    CHECK(is_push_clique(pushed));
    // complementary sets give the same orientation
    CHECK(push(d, VertexSet::of({ 0, 2 })) == push(d, VertexSet::of({ 1, 3 })));
}

TEST_CASE("push_related")
{
    auto d = special_4cycle();
    for (Mask s = 0; s < 16; ++s)
        CHECK(push_related(d, push(d, VertexSet{ s })));

    auto p3 = path_graph(3);
    for (std::uint64_t i = 0; i < 4; ++i)
        for (std::uint64_t j = 0; j < 4; ++j)
            CHECK(push_related(orientation_from_index(p3, i), orientation_from_index(p3, j)));

    // the directed 4-cycle is in the other class
    auto directed = Orientation::from_out_masks(cycle_graph(4), OutMasks{ 0b0010, 0b0100, 0b1000, 0b0001 });
    CHECK_FALSE(push_related(d, directed));
    CHECK_THROWS_AS(push_related(d, orientation_from_index(path_graph(4), 0)), GraphError);
}

TEST_CASE("push classes partition all orientations")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : enumerate_graphs(n)) {
            PushClassSpace space{ g };
            CHECK(space.dimension() == g.edge_count() - n + component_count(g));
            std::map<std::uint64_t, int> sizes;
            for (std::uint64_t i = 0; i < (std::uint64_t{ 1 } << g.edge_count()); ++i) {
                auto d = orientation_from_index(g, i);
                auto r = space.class_of(d);
                ++sizes[r];
                CHECK(push_related(d, space.representative(r)));
            }
            CHECK(sizes.size() == space.class_count());
            for (auto [r, size] : sizes)
                CHECK(size == (1 << (n - component_count(g))));
        }
}

TEST_CASE("push class representative counts")
{
    CHECK(push_class_reps(cycle_graph(4)).size() == 2);
    CHECK(push_class_reps(path_graph(3)).size() == 1);
    CHECK(push_class_reps(path_graph(4)).size() == 1);
    CHECK(push_class_reps(complete_graph(4)).size() == 8);
    CHECK(push_class_reps(complete_bipartite(2, 3)).size() == 4);
}

TEST_CASE("agree status")
{
    auto d = special_4cycle();
    CHECK(agree_status(d, 0, 2, 3) == Agreement::agree);
    CHECK(agree_status(d, 0, 2, 1) == Agreement::disagree);
    CHECK(agree_status(two_path(), 0, 2, 1) == Agreement::disagree);
    CHECK_THROWS_AS(agree_status(d, 0, 0, 1), GraphError);
    CHECK_THROWS_AS(agree_status(d, 0, 2, 0), GraphError);
}

TEST_CASE("oriented and push clique predicates")
{
    CHECK(is_oriented_clique(two_path()));
    auto sink = Orientation::from_out_masks(path_graph(3), OutMasks{ 0b010, 0, 0b010 });
    auto check = is_oriented_clique(sink);
    CHECK_FALSE(check.holds);
    CHECK(check.failing_pair == Edge{ 0, 2 });

    CHECK(is_push_clique(special_4cycle()));
    CHECK(is_push_clique_bruteforce(special_4cycle()));
    CHECK_FALSE(is_push_clique(two_path()));
    CHECK_FALSE(is_push_clique_bruteforce(two_path()));

    auto k4 = complete_graph(4);
    for (std::uint64_t i = 0; i < 64; ++i) {
        CHECK(is_oriented_clique(orientation_from_index(k4, i)));
        CHECK(is_push_clique(orientation_from_index(k4, i)));
    }
    auto triangle = Orientation::from_out_masks(complete_graph(3), OutMasks{ 0b010, 0b100, 0b001 });
    CHECK(is_push_clique_bruteforce(triangle));
    CHECK_THROWS_AS(is_push_clique_bruteforce(orientation_from_index(Graph{ 11 }, 0)), GraphError);
}

TEST_CASE("predicates against arc-list oracles")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : enumerate_graphs(n))
            for (std::uint64_t i = 0; i < (std::uint64_t{ 1 } << g.edge_count()); ++i) {
                auto d = orientation_from_index(g, i);
                auto arcs = oracle::arcs_of(d);
                CHECK(is_oriented_clique(d).holds == oracle::oriented_clique(arcs));
                CHECK(is_push_clique(d).holds == oracle::push_clique(arcs));
                CHECK(is_push_clique_bruteforce(d) == oracle::push_clique(arcs));
            }
}

TEST_CASE("push clique is constant on push classes")
{
    for (const auto & g : enumerate_graphs(5)) {
        PushClassSpace space{ g };
        for (std::uint64_t i = 0; i < (std::uint64_t{ 1 } << g.edge_count()); ++i) {
            auto d = orientation_from_index(g, i);
            CHECK(is_push_clique(d).holds == is_push_clique(space.representative(space.class_of(d))).holds);
        }
    }
}
