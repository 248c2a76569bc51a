#pragma once

#include <cstdint>

namespace rainbow {

/// SplitMix64 stream. The constants are part of the determinism contract:
/// every generator output is a pure function of the seed.
///
///   state += 0x9E3779B97F4A7C15
///   z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform integer in [lo, hi].
    int between(int lo, int hi);
    /// Uniform double in [0, 1) from the top 53 bits.
    double unit();

private:
    std::uint64_t state_;
};

/// Mixes a base seed with a stream index into an independent seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace rainbow
