// parallel.hpp -- a minimal task pool for splitting search trees.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace psq {

/// Runs task(i) for i in [0, count) on `workers` threads. Tasks are claimed
/// in index order. skip(i) is consulted right before a task starts and lets
/// callers drop tasks whose results can no longer matter. The first
/// exception thrown by a task is rethrown once all threads have joined.
template <class Task, class Skip>
void run_tasks(std::size_t count, unsigned workers, Task&& task, Skip&& skip)
{
    workers = std::max(1u, workers);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            if (skip(i))
                continue;
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    if (workers == 1 || count <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(workers, count); ++t)
            pool.emplace_back(body);
        for (std::thread& t : pool)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);
}

template <class Task>
void run_tasks(std::size_t count, unsigned workers, Task&& task)
{
    run_tasks(count, workers, std::forward<Task>(task), [](std::size_t) { return false; });
}

/// Worker count from the PSQ_WORKERS environment variable, or 1.
unsigned default_workers();

} // namespace psq
