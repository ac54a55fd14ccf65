#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace unionde {

/// Seeded random stream owned by a single run.
///
/// Draws are derived directly from the raw 64-bit output of std::mt19937_64,
/// whose sequence is fixed by the standard. The standard distributions are
/// deliberately avoided because their algorithms vary between library
/// implementations, which would break cross-platform reproducibility.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : _seed(seed), _engine(seed) {}

    std::uint64_t seed() const { return _seed; }

    /// Uniform real in [0, 1) with 53 bits of resolution.
    double uniform() { return static_cast<double>(_engine() >> 11) * 0x1.0p-53; }

    /// Uniform real in [lo, hi]; the upper end is only reachable through rounding.
    double uniform(double lo, double hi) { return std::min(lo + (hi - lo) * uniform(), hi); }

    /// Uniform integer in the closed range [lo, hi].
    std::size_t uniform_int(std::size_t lo, std::size_t hi);

    /// Index drawn with probability proportional to weights[j].
    /// Negative weights count as zero; an all-zero vector draws uniformly.
    std::size_t weighted_index(std::span<const double> weights);

private:
    std::uint64_t _seed;
    std::mt19937_64 _engine;
};

/// Deterministic 64-bit mixer (splitmix64 finalizer).
constexpr std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace unionde
