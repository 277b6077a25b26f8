#ifndef CLUSTERFORGE_PARALLEL_HPP
#define CLUSTERFORGE_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace clusterforge {

// Worker count: an explicit request wins, otherwise the CLUSTER_FORGE_THREADS
// environment variable, otherwise the hardware concurrency.
inline int thread_cap(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CLUSTER_FORGE_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : (int)hw;
}

/*
 * Runs fn(i) for i in [0, count) on up to `threads` workers.  Indices are
 * dealt round-robin, every worker writes only to caller-owned slots for its
 * own indices, and the caller reduces in index order afterwards, so results
 * never depend on the worker count.  If calls throw, the exception from the
 * lowest index is rethrown, again independent of scheduling.
 */
template <class Fn>
void parallel_for(size_t count, const Fn& fn, int threads = 0) {
    int workers = thread_cap(threads);
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if ((size_t)workers > count) workers = (int)count;
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < count; i += workers) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace clusterforge

#endif
