#pragma once

#include <cstdint>
#include <random>

namespace tracerec {

/// 64-bit avalanche mix (splitmix64 finalizer).
std::uint64_t mix64(std::uint64_t z);

/// Derives a substream seed from (seed, index). Used for per-trial and
/// per-trace streams so replay depends only on the indices, not on how much
/// of any parent stream was consumed.
std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t index);

/// Deterministic random stream. Reproducible per build for a given seed.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    std::uint8_t next_bit() { return static_cast<std::uint8_t>(next_u64() >> 63); }

    /// Stream derived from this stream's construction seed and an index;
    /// independent of how much of this stream has been consumed.
    RandomStream substream(std::uint64_t index) const {
        return RandomStream(combine_seed(seed_, index));
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace tracerec
