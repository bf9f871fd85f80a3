#ifndef GWDT_RNG_HPP
#define GWDT_RNG_HPP

#include <cstdint>

namespace gwdt {

// splitmix64: tiny, seed-stable across platforms, good enough for
// property-test sampling.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi], inclusive
    long long uniform(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }
};

}  // namespace gwdt

#endif
