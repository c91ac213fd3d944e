#pragma once

#include <cstdint>
#include <random>

namespace patch_contact {

/// Seeded generator shared by all samplers.
///
/// The engine is std::mt19937_64 (whose output sequence is fixed by the C++
/// standard). Distributions are derived here from raw 64-bit draws instead of
/// the <random> distribution classes, whose algorithms are implementation
/// defined, so a seed reproduces the same values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform integer in [0, n), n > 0. Modulo bias is below 2^-40 for n < 2^24.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool chance(double p) { return unit() < p; }
  /// Standard exponential draw, used for Dirichlet weights.
  double exponential();

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent seed for stream `index` of a base seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace patch_contact
