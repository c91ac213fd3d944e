#include "patch_contact/random.hpp"

#include <cmath>

namespace patch_contact {

double Rng::exponential() {
  // 1 - unit() lies in (0, 1], so the log is finite.
  return -std::log(1.0 - unit());
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace patch_contact
