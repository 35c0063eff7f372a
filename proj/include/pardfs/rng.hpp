#pragma once

#include <cstdint>

namespace pardfs {

// splitmix64 finalizer; the seeding primitive for every per-vertex /
// per-level random decision so results depend only on the seed.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline bool coin(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return (mix64(seed ^ mix64(a) ^ (mix64(b) << 1)) & 1) != 0;
}

}  // namespace pardfs
