#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace cmlab::rng {

/// Philox4x32-10 (Salmon et al., SC'11). A keyed bijection of 128-bit
/// counters; every draw is addressed by (key, counter), never by a stream
/// position.
using Counter = std::array<std::uint32_t, 4>;
Counter philox4x32(Counter counter, std::uint64_t key) noexcept;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of replica `k` derived from a base seed.
constexpr std::uint64_t replica_seed(std::uint64_t seed, std::uint64_t k) noexcept {
  return seed ^ mix64(k);
}

/// Independent fields share a seed but never a counter.
enum class Field : std::uint32_t {
  GaussianDiagonal = 1,
  GaussianOffDiagonal = 2,
  Xi = 3,
  Haar = 4,
  Moment = 5,
};

/// Two independent standard normals addressed by (seed, field, i, j).
std::array<double, 2> normal_pair(std::uint64_t seed, Field field, std::uint32_t i,
                                  std::uint32_t j) noexcept;

/// Circularly symmetric complex Gaussian: real and imaginary parts
/// independent N(0, 1/2), so E|z|^2 = 1 and E z^2 = 0.
std::complex<double> complex_gaussian(std::uint64_t seed, Field field, std::uint32_t i,
                                      std::uint32_t j) noexcept;

}  // namespace cmlab::rng
