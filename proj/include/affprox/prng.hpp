#pragma once

#include <cstdint>

namespace affprox {

/// Minimal deterministic generator (splitmix64). Self-contained so that a
/// fixed seed yields the same stream on every platform and toolchain, which
/// keeps generated instance files byte-identical.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant for
    /// test-data generation.
    long long next_in(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(next() % span);
    }
};

}  // namespace affprox
