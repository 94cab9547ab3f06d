#include "betfree/rng.hpp"

#include <cmath>
#include <numbers>

namespace betfree {

double SeededRng::standard_normal() {
  // u1 in (0, 1] keeps the log finite; the sine twin is discarded so every
  // normal costs exactly two engine draws regardless of history.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t SeededRng::derive(std::uint64_t base, std::uint64_t stream) {
  // SplitMix64 finalizer over base + stream * golden gamma.
  std::uint64_t z = base + stream * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace betfree
