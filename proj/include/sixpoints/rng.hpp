#ifndef SIXPOINTS_RNG_HPP
#define SIXPOINTS_RNG_HPP

#include <cstdint>
#include <random>

namespace sixpoints {

// splitmix64 finalizer; used to derive independent sub-seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return mix64(mix64(seed ^ 0x5851f42d4c957f2dull * stream) + index);
}

// Unbiased draw from [0, bound) by masked rejection. Implemented by hand so
// results are identical across standard libraries (std::uniform_int_distribution
// is not portable bit-for-bit).
inline std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t bound) {
  std::uint64_t mask = ~std::uint64_t(0);
  std::uint64_t b = bound - 1;
  mask >>= __builtin_clzll(b | 1);
  for (;;) {
    std::uint64_t v = g() & mask;
    if (v < bound) return v;
  }
}

// Uniform integer in [lo, hi], inclusive.
inline long long uniform_int(std::mt19937_64& g, long long lo, long long hi) {
  return lo + (long long)uniform_below(g, std::uint64_t(hi - lo + 1));
}

}  // namespace sixpoints

#endif
