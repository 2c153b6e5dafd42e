#ifndef RUMOR_RNG_HPP
#define RUMOR_RNG_HPP

#include <cstdint>
#include <random>

namespace rumor {

/// Deterministic 64-bit generator used everywhere randomness is needed.
///
/// std::mt19937_64 is fully specified by the standard, and both helpers below
/// avoid the library distributions (whose output is implementation-defined),
/// so streams are reproducible across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n), n >= 1. Lemire multiply-shift; the modulo
    /// bias is at most n / 2^64 and ignored.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(eng_()) * n) >> 64);
    }

    std::uint64_t next() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

} // namespace rumor

#endif
