#pragma once

#include <cstdint>
#include <random>

namespace specgames {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Seed for an independent substream keyed by (master, a, b). Streams for
/// different keys never share draws, so adding a scheme or deployment does
/// not perturb the draws of another.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t a,
                                    std::uint64_t b = 0) {
  std::uint64_t s = master;
  std::uint64_t h = splitmix64(s);
  s = h ^ (a + 0x9e3779b97f4a7c15ull);
  h = splitmix64(s);
  s = h ^ (b + 0xc6a4a7935bd1e995ull);
  return splitmix64(s);
}

inline std::mt19937_64 make_engine(std::uint64_t master, std::uint64_t a,
                                   std::uint64_t b = 0) {
  return std::mt19937_64(substream_seed(master, a, b));
}

}  // namespace specgames
