#include <doctest.h>

#include <pushlab/parallel.hpp>

#include <cstdlib>
#include <numeric>

using namespace pushlab;

TEST_CASE("first_index serial and parallel agree")
{
    set_worker_count(4);
    for (std::uint64_t count : { 0ull, 1ull, 127ull, 128ull, 129ull, 5000ull }) {
        for (std::uint64_t target : { 0ull, 1ull, 128ull, 300ull, 4999ull, 99999ull }) {
            auto accept = [&] (std::uint64_t i) { return i >= target && i % 7 == target % 7; };
            CHECK(kernels::first_index_serial(count, accept) == kernels::first_index_parallel(count, accept));
        }
    }
    set_worker_count(0);
}

TEST_CASE("map and filter keep input order")
{
    set_worker_count(3);
    std::vector<int> items(1000);
    std::iota(items.begin(), items.end(), 0);
    auto square = [] (int x) { return static_cast<long>(x) * x; };
    CHECK(kernels::map_serial(items, square) == kernels::map_parallel(items, square));
    auto odd = [] (int x) { return x % 2 == 1; };
    auto a = kernels::filter(Execution::serial, items, odd);
    auto b = kernels::filter(Execution::parallel, items, odd);
    CHECK(a == b);
    CHECK(a.size() == 500);
    CHECK(a.front() == 1);
    set_worker_count(0);
}

TEST_CASE("worker count configuration")
{
    set_worker_count(2);
    CHECK(worker_count() == 2);
    CHECK(default_execution() == Execution::parallel);
    set_worker_count(1);
    CHECK(default_execution() == Execution::serial);

    set_worker_count(0);
    ::setenv("PUSHLAB_THREADS", "3", 1);
    CHECK(worker_count_from_environment() == 3);
    CHECK(worker_count() == 3);
    ::setenv("PUSHLAB_THREADS", "zero", 1);
    CHECK_FALSE(worker_count_from_environment().has_value());
    CHECK(worker_count() >= 1);
    ::unsetenv("PUSHLAB_THREADS");
}
