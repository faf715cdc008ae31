#ifndef PUSHLAB_PARALLEL_HPP
#define PUSHLAB_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include <omp.h>

namespace pushlab
{
    /// Which implementation of a sweep to run. The serial forms are the reference the
    /// OpenMP forms are tested against; both must return identical results.
    enum class Execution
    {
        serial,
        parallel
    };

    /// 0 restores the default: PUSHLAB_THREADS if set, else all hardware threads.
    void set_worker_count(int workers);
    auto worker_count() -> int;

    /// serial when one worker is configured, parallel otherwise.
    auto default_execution() -> Execution;

    /// Parses PUSHLAB_THREADS; nullopt when unset or not a positive integer.
    auto worker_count_from_environment() -> std::optional<int>;

    namespace kernels
    {
        template <typename Predicate>
        auto first_index_serial(std::uint64_t count, Predicate && accept) -> std::optional<std::uint64_t>
        {
            for (std::uint64_t i = 0; i < count; ++i)
                if (accept(i))
                    return i;
            return std::nullopt;
        }

        /// Least index in [0, count) accepted by the predicate. Blocks run in parallel; a
        /// block is skipped only once a smaller hit is known, so the result is the same as
        /// the serial scan whatever the schedule.
        template <typename Predicate>
        auto first_index_parallel(std::uint64_t count, Predicate && accept) -> std::optional<std::uint64_t>
        {
            constexpr std::uint64_t block = 128;
            const std::int64_t blocks = static_cast<std::int64_t>((count + block - 1) / block);
            std::atomic<std::uint64_t> best{ count };

#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
            for (std::int64_t b = 0; b < blocks; ++b) {
                std::uint64_t start = static_cast<std::uint64_t>(b) * block;
                if (start >= best.load(std::memory_order_relaxed))
                    continue;
                std::uint64_t end = std::min(count, start + block);
                for (std::uint64_t i = start; i < end; ++i) {
                    if (accept(i)) {
                        std::uint64_t seen = best.load(std::memory_order_relaxed);
                        while (i < seen && ! best.compare_exchange_weak(seen, i, std::memory_order_relaxed))
                            ;
                        break;
                    }
                }
            }

            std::uint64_t found = best.load();
            return found < count ? std::optional<std::uint64_t>{ found } : std::nullopt;
        }

        template <typename Predicate>
        auto first_index(Execution how, std::uint64_t count, Predicate && accept) -> std::optional<std::uint64_t>
        {
            return how == Execution::serial ? first_index_serial(count, accept) : first_index_parallel(count, accept);
        }

        /// Evaluates f(items[i]) for every i, results in input order.
        template <typename T, typename F>
        auto map_serial(const std::vector<T> & items, F && f)
        {
            std::vector<decltype(f(items.front()))> results;
            results.reserve(items.size());
            for (const auto & item : items)
                results.push_back(f(item));
            return results;
        }

        template <typename T, typename F>
        auto map_parallel(const std::vector<T> & items, F && f)
        {
            using R = decltype(f(items.front()));
            std::vector<std::optional<R>> slots(items.size());
            const std::int64_t count = static_cast<std::int64_t>(items.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
            for (std::int64_t i = 0; i < count; ++i)
                slots[i].emplace(f(items[i]));

            std::vector<R> results;
            results.reserve(items.size());
            for (auto & slot : slots)
                results.push_back(std::move(*slot));
            return results;
        }

        template <typename T, typename F>
        auto map(Execution how, const std::vector<T> & items, F && f)
        {
            return how == Execution::serial ? map_serial(items, f) : map_parallel(items, f);
        }

        /// Items satisfying the predicate, in input order.
        template <typename T, typename Predicate>
        auto filter(Execution how, const std::vector<T> & items, Predicate && accept) -> std::vector<T>
        {
            auto keep = map(how, items, [&] (const T & item) -> char { return accept(item) ? 1 : 0; });
            std::vector<T> result;
            for (std::size_t i = 0; i < items.size(); ++i)
                if (keep[i])
                    result.push_back(items[i]);
            return result;
        }
    }
}

#endif
