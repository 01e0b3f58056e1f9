#pragma once

#include <cstdint>

namespace iotviz {

// SplitMix64 finalizer. Used to turn arbitrary 64-bit seeds (including 0)
// into well-mixed generator states and to derive per-pair jitter streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// xorshift64* (Vigna): three xor-shifts then one 64-bit multiply.
//
// Every seeded artifact in the project draws from this generator and from
// nothing else; std:: distributions are implementation-defined and would
// break cross-platform reproducibility. Doubles are formed from the top 53
// bits, so uniform01() is exact and identical on every IEEE-754 target.
class Prng {
public:
    explicit constexpr Prng(std::uint64_t seed) : state_(splitmix64(seed)) {
        if (state_ == 0) state_ = 0x2545F4914F6CDD1Dull;
    }

    constexpr std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }

    // [0, 1)
    constexpr double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // [lo, hi)
    constexpr double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::uint64_t state_;
};

}  // namespace iotviz
