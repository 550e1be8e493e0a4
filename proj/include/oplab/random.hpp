#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "oplab/error.hpp"

namespace oplab {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Per-trial seed used by every sweep: seed xor trial index.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept
{
    return seed ^ trial;
}

/// Deterministic random source. The conversions to reals are written out here
/// rather than taken from <random> distributions, whose output is
/// implementation-defined; reports must be byte-identical across toolchains.
class Rng
{
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi].
    int integer(int lo, int hi);

    double normal();
    Complex complex_normal();

    /// Area-uniform point in the disk of the given radius.
    Complex disk(double radius);

    /// Uniform point on the unit circle.
    Complex unimodular();

private:
    std::mt19937_64 engine_;
};

} // namespace oplab
