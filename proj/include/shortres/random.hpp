#pragma once

// Seeded streams. Every sample of a survey gets its own stream derived from
// (seed, index), so results do not depend on execution order.

#include <cstdint>
#include <random>

namespace shortres {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::mt19937_64 derive_stream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ull)));
}

/// Uniform residue mod p. The modulo bias is below 2^-32 for p < 2^31.
inline std::uint32_t draw_residue(std::mt19937_64& rng, std::uint32_t p) {
  return static_cast<std::uint32_t>(rng() % p);
}

}  // namespace shortres
