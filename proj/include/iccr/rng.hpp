#pragma once

#include <cstdint>

namespace iccr {

// Self-contained xoshiro256++ generator seeded through splitmix64.
// std::uniform_*_distribution is implementation-defined, and the experiment
// driver promises byte-identical output for a given seed across runs and
// thread counts, so all sampling primitives are spelled out here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : s_) word = splitmix64(x);
  }

  // Stream k of a base seed. Trajectory k uses derive_stream(seed, k), which
  // keeps trajectories independent of scheduling order.
  static Rng derive_stream(std::uint64_t seed, std::uint64_t k) {
    return Rng(splitmix64_once(seed + 0x9E3779B97F4A7C15ULL * (k + 1)));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, bound) by rejection; unbiased for any bound.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % bound;
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool next_bernoulli(double p) { return next_double() < p; }

  // +1 with probability p_plus, otherwise -1.
  int next_sign(double p_plus) { return next_double() < p_plus ? +1 : -1; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    return splitmix64_once(x);
  }

  static std::uint64_t splitmix64_once(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t s_[4];
};

}  // namespace iccr
