#pragma once

#include <cstdint>
#include <random>

namespace treesplit {

/// Seeded deterministic random stream. Identical seed and call sequence
/// produce identical outputs. Parallel work must use independent streams
/// obtained from derive(), never a shared stream.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    /// Independent stream keyed by (seed, stream_index). Used to give each
    /// trial or chain its own stream so results do not depend on scheduling.
    RngStream derive(std::uint64_t stream_index) const;

    std::uint64_t next_u64();

    /// Uniform integer in [0, n). Requires n >= 1. Unbiased (rejection).
    std::uint64_t uniform_below(std::uint64_t n);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform_real();

    bool bernoulli(double p);

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to decorrelate derived stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace treesplit
