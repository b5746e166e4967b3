#pragma once

#include <cstdint>

namespace rtc {

// splitmix64; deterministic across platforms, unlike the std distributions.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) via 128-bit multiply-shift.
    uint32_t below(uint32_t n) {
        return static_cast<uint32_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    bool coin() { return next() >> 63; }

    // Independent stream for (seed, index) pairs.
    static Rng stream(uint64_t seed, uint64_t index) {
        Rng mixer(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        return Rng(mixer.next());
    }
};

}  // namespace rtc
