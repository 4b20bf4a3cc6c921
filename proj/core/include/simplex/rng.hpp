#pragma once

#include <cstdint>
#include <random>

namespace simplex {

using Rng = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based seed for replica `stream` of a run seeded with `seed`.
/// Independent of thread scheduling: replica i always gets the same stream.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return mix64(mix64(seed) ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(mix_seed(seed, stream));
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace simplex
