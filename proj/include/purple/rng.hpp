#pragma once

// Seeded deterministic pseudorandom generator. The algorithm is part of the
// reproducibility contract: identical seeds reproduce identical colourings
// byte-for-byte across platforms and versions.
//
// Generator: SplitMix64 (Steele, Lea, Flood; public-domain reference
// constants). Bounded draws use unbiased rejection on the top multiple of
// the bound; unit draws take the top 53 bits.

#include <cstdint>

namespace purple {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x > limit);
        return x % bound;
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bernoulli(double p) { return next_unit() < p; }

private:
    std::uint64_t state_;
};

}  // namespace purple
