#include "tracerec/rng.hpp"

namespace tracerec {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index));
}

}  // namespace tracerec
