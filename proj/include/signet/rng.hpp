#pragma once

#include <cstdint>
#include <random>

namespace signet {

/// Seedable deterministic random stream. The same seed always yields the
/// same stream. A stream has a single consumer; code that needs concurrent
/// randomness derives one child stream per worker with split().
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(scramble(seed)) {}

    /// Fresh stream seeded from OS entropy.
    static Rng from_entropy() {
        std::random_device rd;
        const std::uint64_t seed =
            (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        return Rng(seed);
    }

    std::uint32_t next_u32() { return static_cast<std::uint32_t>(engine_()); }
    std::uint64_t next_u64() { return engine_(); }

    /// Derive an independently seeded child stream. Advances this stream
    /// by one draw, so derivation is itself deterministic.
    Rng split() { return Rng(next_u64()); }

private:
    // splitmix64 step; decorrelates small consecutive seeds.
    static std::uint64_t scramble(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

} // namespace signet
