#pragma once

#include <cstdint>
#include <vector>

namespace edfk {

// splitmix64; self-contained so that seeded streams are identical across
// platforms and standard library versions.
struct rng {
    uint64_t state;

    explicit rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi], inclusive
    int uniform(int lo, int hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    // true with probability num/den
    bool chance(int num, int den) { return uniform(0, den - 1) < num; }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }
};

}  // namespace edfk
