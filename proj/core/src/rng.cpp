#include "treesplit/rng.hpp"

#include <stdexcept>

namespace treesplit {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

RngStream RngStream::derive(std::uint64_t stream_index) const {
    return RngStream(splitmix64(splitmix64(seed_) ^ (stream_index + 1)));
}

std::uint64_t RngStream::next_u64() {
    return engine_();
}

std::uint64_t RngStream::uniform_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below: n must be >= 1");
    if (n == 1) return 0;
    // Rejection from the top range to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

double RngStream::uniform_real() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

bool RngStream::bernoulli(double p) {
    return uniform_real() < p;
}

}  // namespace treesplit
