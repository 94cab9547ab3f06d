#pragma once

#include <cstdint>
#include <random>

namespace betfree {

// Deterministic random source. std::mt19937_64 has a fully specified output
// sequence, and the uniform/normal transforms below are written out here
// instead of using std::*_distribution (whose algorithms are
// implementation-defined), so a given (algorithm_id, seed) reproduces the
// same draw sequence on every platform. The id is recorded in CSV metadata.
class SeededRng {
 public:
  static constexpr const char* kAlgorithmId = "mt19937_64+boxmuller";

  explicit SeededRng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  // Uniform on [0, 1), 53-bit resolution. One engine draw.
  double uniform01() {
    ++draws_;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller. Exactly two engine draws per call.
  double standard_normal();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t draws() const { return draws_; }

  // Decorrelated seed for a named substream (SplitMix64 finalizer), so the
  // training stream, holdout and problem construction get independent
  // generators derived from one user-facing seed.
  static std::uint64_t derive(std::uint64_t base, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
};

}  // namespace betfree
