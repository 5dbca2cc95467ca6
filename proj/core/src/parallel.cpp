// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "ampcap/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <string>
#include <thread>
#include <vector>

namespace ampcap {
namespace {

unsigned initial_thread_count() {
    if (const char* env = std::getenv("AMPCAP_THREADS")) {
        try {
            const unsigned long v = std::stoul(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::atomic<unsigned>& threads_setting() {
    static std::atomic<unsigned> value{initial_thread_count()};
    return value;
}

// Lets an exception thrown inside a block carry the index it failed at.
struct BlockFailure {
    std::size_t index = std::numeric_limits<std::size_t>::max();
    std::exception_ptr error;
};

}  // namespace

unsigned thread_count() { return threads_setting().load(); }

void set_thread_count(unsigned n) { threads_setting().store(std::max(1u, n)); }

void parallel_blocks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
    if (n == 0) {
        return;
    }
    const std::size_t workers = std::min<std::size_t>(thread_count(), n);
    if (workers == 1) {
        body(0, n);
        return;
    }
    std::vector<BlockFailure> failures(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = n * w / workers;
            const std::size_t end = n * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] {
                // Run element by element so a failure can be pinned to its index.
                for (std::size_t i = begin; i < end; ++i) {
                    try {
                        body(i, i + 1);
                    } catch (...) {
                        failures[w] = {i, std::current_exception()};
                        return;
                    }
                }
            });
        }
    }
    const auto first = std::min_element(failures.begin(), failures.end(),
                                        [](const auto& a, const auto& b) { return a.index < b.index; });
    if (first->error) {
        std::rethrow_exception(first->error);
    }
}

}  // namespace ampcap
