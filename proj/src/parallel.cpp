#include <pushlab/parallel.hpp>

#include <cstdlib>
#include <string>

namespace pushlab
{
    namespace
    {
        std::atomic<int> configured_workers{ 0 };
    }

    auto worker_count_from_environment() -> std::optional<int>
    {
        const char * text = std::getenv("PUSHLAB_THREADS");
        if (! text || ! *text)
            return std::nullopt;
        try {
            std::size_t used = 0;
            int value = std::stoi(text, &used);
            if (used != std::string{ text }.size() || value < 1)
                return std::nullopt;
            return value;
        }
        catch (const std::exception &) {
            return std::nullopt;
        }
    }

    void set_worker_count(int workers)
    {
        configured_workers = workers > 0 ? workers : 0;
    }

    auto worker_count() -> int
    {
        if (int w = configured_workers.load(); w > 0)
            return w;
        if (auto env = worker_count_from_environment())
            return *env;
        return std::max(1, omp_get_num_procs());
    }

    auto default_execution() -> Execution
    {
        return worker_count() > 1 ? Execution::parallel : Execution::serial;
    }
}
