// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace ampcap {

/// Worker count used by parallel_for. Defaults to the AMPCAP_THREADS
/// environment variable, else std::thread::hardware_concurrency().
unsigned thread_count();
void set_thread_count(unsigned n);

/// Split [0, n) into contiguous blocks, one per worker, and call
/// body(begin, end) on each. If any block throws, the exception raised at the
/// smallest index is rethrown after all workers finish.
void parallel_blocks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

template <class F>
void parallel_for(std::size_t n, F&& f) {
    parallel_blocks(n, [&f](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            f(i);
        }
    });
}

}  // namespace ampcap
