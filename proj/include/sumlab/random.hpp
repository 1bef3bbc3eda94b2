#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace sumlab::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Generator for trial `index` of a run seeded with `master`; independent of
/// the order trials are executed in.
inline std::mt19937_64 for_trial(std::uint64_t master, std::uint64_t index) {
    return std::mt19937_64(splitmix64(master + index));
}

/// Uniform in [0, bound), bound > 0. Written out because the standard
/// distributions are not specified bit-for-bit across library vendors.
inline std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t r = g();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

/// Uniform in [lo, hi].
inline long long uniform_int(std::mt19937_64& g, long long lo, long long hi) {
    return lo + static_cast<long long>(uniform_below(g, static_cast<std::uint64_t>(hi - lo) + 1));
}

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace sumlab::rng
