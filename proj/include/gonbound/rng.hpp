#pragma once

#include <cstdint>

namespace gonbound {

/// splitmix64: tiny, well-known, bit-stable across platforms. Used to mix
/// seeds into independent streams and to produce deterministic start vectors.
inline uint64_t splitmix64_next(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  uint64_t s = seed;
  uint64_t a = splitmix64_next(s);
  s ^= stream * 0x9e3779b97f4a7c15ULL;
  uint64_t b = splitmix64_next(s);
  return a ^ (b + 0x632be59bd9b4e019ULL);
}

/// Uniform double in [0,1) from 53 random bits.
inline double to_unit_double(uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

} // namespace gonbound
