#pragma once

#include <cstdint>
#include <random>

namespace cliquealpha {

/// Deterministic 64-bit PRNG: std::mt19937_64 (stream fully specified by the
/// C++ standard) with hand-rolled uniform conversions, so identical seeds
/// give identical output on every platform. std::uniform_*_distribution is
/// deliberately avoided: its output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0,1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in {0, ..., bound-1}. Rejection sampling, no modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  bool next_bernoulli(double p) { return next_double() < p; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace cliquealpha
