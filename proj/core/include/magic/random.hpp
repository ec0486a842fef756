#pragma once

#include <cstdint>
#include <random>

namespace magic {

using Rng = std::mt19937_64;

// splitmix64 finalizer; derives independent sub-seeds from the single run seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Sub-seed streams used across the library.
namespace streams {
inline constexpr std::uint64_t kInit = 1;
inline constexpr std::uint64_t kHoldout = 2;
inline constexpr std::uint64_t kNonEdges = 3;
inline constexpr std::uint64_t kSampler = 4;
inline constexpr std::uint64_t kJaccard = 5;
inline constexpr std::uint64_t kBaseline = 6;
}  // namespace streams

}  // namespace magic
