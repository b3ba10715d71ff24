#pragma once

#include <cstdint>

namespace rankcodes {

// SplitMix64. Chosen over <random> engines because its output stream is
// pinned by the algorithm itself, so seeded runs reproduce across platforms
// and standard library versions.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = bound * (~0ULL / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

   private:
    std::uint64_t state_;
};

// Stateless mix of a seed and a stream index; lets parallel workers derive
// the generator for item i without consuming the items before it.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    SplitMix64 g(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    return g.next();
}

}  // namespace rankcodes
