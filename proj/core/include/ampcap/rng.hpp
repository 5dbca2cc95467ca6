// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace ampcap {

/// Identifies a family of reproducible random streams.
///
/// Every consumer derives per-sample streams from (master_seed, stream_id,
/// sample index), so results do not depend on scheduling or thread count.
struct RngSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;
};

/// Philox4x32-10 block function (Salmon et al., Random123).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                         std::array<std::uint32_t, 2> key);

/// SplitMix64 finaliser; a bijective 64-bit mixer.
std::uint64_t splitmix64(std::uint64_t x);

/// Counter-based generator bound to one sample of one stream.
class CounterRng {
public:
    CounterRng(RngSpec spec, std::uint64_t sample_index);

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    /// Uniform on (0, 1]; zero is never returned.
    double uniform_pos();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);

private:
    void refill();

    std::array<std::uint32_t, 2> key_{};
    std::uint64_t sample_ = 0;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int used_ = 4;
};

/// A 64-bit seed for sample `index`, derived deterministically from `spec`.
std::uint64_t derive_seed(RngSpec spec, std::uint64_t index);

}  // namespace ampcap
