#pragma once

#include <cstdint>

namespace cubespec {

// splitmix64 (Steele, Lea, Flood: "Fast splittable pseudorandom number
// generators", OOPSLA 2014). Chosen because the state transition is a plain
// counter, so independent streams can be derived from (seed, index) and the
// trial order never affects the draws.
struct SplitMix64 {
  std::uint64_t state;

  explicit constexpr SplitMix64(std::uint64_t s) : state(s) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// Stafford mix 13, the output permutation of splitmix64.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Starting state of the generator for one trial. Avalanche-mixing the index
// before combining keeps nearby trials in distant parts of the orbit.
constexpr std::uint64_t stream_state(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ull));
}

// Uniform draw in [0, bound) by 128-bit multiply-shift; bias is bound/2^64.
constexpr std::uint64_t bounded(std::uint64_t raw, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(raw) * bound) >> 64);
}

}  // namespace cubespec
