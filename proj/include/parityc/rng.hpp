#pragma once

#include <cstdint>

namespace parityc {

// splitmix64: tiny, fast, and fully specified, so sampled suites reproduce
// bit-for-bit on any platform.  We avoid std::uniform_int_distribution on
// purpose (its output is implementation-defined) and reduce with a plain
// modulo; the ranges drawn here are tiny, so the bias is irrelevant for
// test sampling.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

struct rng {
  std::uint64_t state;
  explicit rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() { return splitmix64(state); }
  // Uniform-ish draw in [0, n); n must be positive and small.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

// Stateless draw keyed by (seed, index): the k-th sample of a suite depends
// only on these two numbers, never on loop order or shard layout.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0xA0761D6478BD642Full + index * 0xE7037ED1A0B428DBull);
  return splitmix64(s);
}

}  // namespace parityc
