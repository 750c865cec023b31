#pragma once

#include <cstdint>

namespace cascade {

// SplitMix64 with counter-based substreams. Substream k of a master seed is
// seeded as mix(seed ^ golden * (k + 1)), which decorrelates neighboring
// sample indices; ensemble workers can therefore draw from disjoint streams
// in any order and still reproduce the serial result bit for bit.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    SplitMix64(std::uint64_t seed, std::uint64_t stream_index);

    std::uint64_t next_u64();
    double next_double();                        // uniform [0, 1), 53-bit
    double next_double(double lo, double hi);    // uniform [lo, hi)

private:
    std::uint64_t state_;
};

}  // namespace cascade
