#include "cascade/random.hpp"

namespace cascade {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

SplitMix64::SplitMix64(std::uint64_t seed, std::uint64_t stream_index)
    : state_(mix(seed ^ (kGolden * (stream_index + 1)))) {}

std::uint64_t SplitMix64::next_u64() {
    state_ += kGolden;
    return mix(state_);
}

double SplitMix64::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_double(double lo, double hi) {
    return lo + (hi - lo) * next_double();
}

}  // namespace cascade
