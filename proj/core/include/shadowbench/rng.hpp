#pragma once

#include <cstdint>

namespace shadowbench {

// Small counter-style generator used for every random draw in the project.
// Keeping one implementation (instead of std distributions, whose output is
// implementation-defined) makes runs bit-reproducible across toolchains.
class SplitMix64 {
 public:
  SplitMix64() = default;
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, bound). Lemire multiply-shift on the high bits.
  std::uint32_t below(std::uint32_t bound) {
    const std::uint64_t hi = next() >> 32;
    return static_cast<std::uint32_t>((hi * bound) >> 32);
  }

  // Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_ = 0;
};

// One splitmix step over a raw state word. GameState embeds its stream as
// a plain uint64 so that successor states stay trivially comparable.
inline std::uint64_t advance_stream(std::uint64_t& state) {
  SplitMix64 g(state);
  const std::uint64_t out = g.next();
  state = g.state();
  return out;
}

// Draw in [0, bound) from an embedded stream word.
inline std::uint32_t stream_below(std::uint64_t& state, std::uint32_t bound) {
  const std::uint64_t hi = advance_stream(state) >> 32;
  return static_cast<std::uint32_t>((hi * bound) >> 32);
}

// Bernoulli draw with probability p from an embedded stream word.
inline bool stream_chance(std::uint64_t& state, double p) {
  return static_cast<double>(advance_stream(state) >> 11) * 0x1.0p-53 < p;
}

// Deterministic seed derivation for independent sub-streams.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace shadowbench
