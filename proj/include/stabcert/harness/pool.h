// Copyright 2026 The stabcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABCERT_HARNESS_POOL_H
#define STABCERT_HARNESS_POOL_H

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace stabcert {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of trial `trial` in stream `stream` of a suite seeded with `seed`.
/// Depends only on its arguments, so results do not depend on scheduling.
inline uint64_t derive_seed(uint64_t seed, uint64_t stream, uint64_t trial) {
    return splitmix64(splitmix64(seed ^ splitmix64(stream)) + trial);
}

/// Runs fn(0..count-1) on a pool of worker threads and returns the results in
/// index order. The first exception thrown by any call is rethrown.
template <typename Fn>
auto run_trials(size_t count, Fn fn, size_t threads = 0) -> std::vector<decltype(fn(size_t{0}))> {
    using Result = decltype(fn(size_t{0}));
    std::vector<Result> results(count);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, std::max<size_t>(count, 1));
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next = count;
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return results;
}

}  // namespace stabcert

#endif
