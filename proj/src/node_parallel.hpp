#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace monocs::detail {

// Worker count from CS_MONOPOLE_THREADS; defaults to 1 (serial).
inline int thread_cap() {
    const char* env = std::getenv("CS_MONOPOLE_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    if (n < 1) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw > 0 && n > static_cast<int>(hw)) n = static_cast<int>(hw);
    return n;
}

// Runs fn(i) for i in [0, count). Each index writes only its own output slot,
// so results are identical for any worker count; callers reduce the slots in
// index order afterwards.
inline void for_each_index(int count, const std::function<void(int)>& fn) {
    int workers = thread_cap();
    if (workers <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    if (workers > count) workers = count;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([=, &fn] {
            for (int i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace monocs::detail
