// Serial against OpenMP timings for the main sweeps. Usage: bench_kernels [workers]

#include <pushlab/census.hpp>
#include <pushlab/decide.hpp>
#include <pushlab/enumerate.hpp>
#include <pushlab/parallel.hpp>
#include <pushlab/planarity.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

using namespace pushlab;

namespace
{
    auto seconds(const std::function<void()> & f) -> double
    {
        auto start = std::chrono::steady_clock::now();
        f();
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    auto row(const char * name, const std::function<void(Execution)> & f) -> void
    {
        double serial = seconds([&] { f(Execution::serial); });
        double parallel = seconds([&] { f(Execution::parallel); });
        std::printf("%-36s %10.3f %10.3f %8.2fx\n", name, serial, parallel, parallel > 0 ? serial / parallel : 0.0);
    }
}

auto main(int argc, char * argv[]) -> int
{
    if (argc > 1)
        set_worker_count(std::atoi(argv[1]));
    std::printf("workers: %d\n", worker_count());
    std::printf("%-36s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

    row("enumerate graphs, n = 8", [] (Execution how) { enumerate_graphs(8, how); });

    // both rejected only after walking the whole space
    auto bipartite = complete_bipartite(3, 9);
    row("push-class search, K3,9 (2^16)", [&] (Execution how) { is_underlying_push_clique(bipartite, how); });

    auto petersen = build_graph(10, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 0 }, { 0, 5 }, { 1, 6 }, { 2, 7 }, { 3, 8 }, { 4, 9 },
                                      { 5, 7 }, { 7, 9 }, { 9, 6 }, { 6, 8 }, { 8, 5 } });
    row("orientation search, Petersen (2^15)", [&] (Execution how) { is_underlying_oriented_clique(petersen, how); });

    row("triangulations, n = 9", [] (Execution how) { generate_triangulations(9, how); });
    row("planar push-clique census, n <= 8", [] (Execution how) { planar_upc_census(8, how); });
    row("no planar push clique on 9", [] (Execution how) { verify_no_planar_push_clique_on_9(how); });
    return 0;
}
