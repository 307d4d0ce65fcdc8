#pragma once

#include <cstdint>

namespace icint::rng {

// splitmix64 finalizer; full-period bijection on 64-bit values.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  x = x ^ (x >> 31);
  return x;
}

// Phase tags keep edge and node draw streams disjoint.
constexpr std::uint64_t kEdgePhase = 0x65646765ULL;
constexpr std::uint64_t kNodePhase = 0x6E6F6465ULL;

// Counter-based stream: the draw for (seed, sample, entity, phase) is a pure
// function of its key, so generation order and thread count never matter.
inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t sample,
                                  std::uint64_t entity, std::uint64_t phase) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ sample);
  h = mix64(h ^ entity);
  h = mix64(h ^ phase);
  return h;
}

inline double to_unit(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;  // [0, 1)
}

inline double uniform01(std::uint64_t seed, std::uint64_t sample,
                        std::uint64_t entity, std::uint64_t phase) {
  return to_unit(counter_hash(seed, sample, entity, phase));
}

// Small sequential generator for experiment-level randomness (alpha draws,
// graph synthesis, snowball seed injection). Not tied to the sample streams.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  double next_unit() { return to_unit(next_u64()); }

  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // Unbiased draw from [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace icint::rng
