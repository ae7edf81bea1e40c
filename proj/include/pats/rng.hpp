#pragma once

#include <cstdint>

namespace pats {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std:: distributions
// because its output stream is fully pinned by the constants below, so
// seeded corpora reproduce bit-for-bit on every platform and toolchain.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) using the top 53 bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double next_double(double lo, double hi) { return lo + next_double() * (hi - lo); }

    // Uniform integer in [0, bound) via 128-bit multiply-shift (Lemire).
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

}  // namespace pats
