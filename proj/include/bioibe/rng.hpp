#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bioibe/bigint.hpp"

namespace bioibe {

// Deterministic random stream. All randomness in the library flows through
// an explicitly passed Rng; nothing draws from global state. A fixed seed
// reproduces the same stream on every platform (mt19937_64 is specified
// bit-for-bit by the standard).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Seeded from the OS entropy source.
  static Rng from_entropy();

  std::uint64_t next_u64() { return eng_(); }

  bool next_bit() { return (next_u64() & 1) != 0; }

  // Uniform in [0, bound). bound must be positive.
  Int below(const Int& bound);

  // Uniform in [1, bound). bound must be at least 2.
  Int below_nonzero(const Int& bound);

  std::vector<std::uint8_t> bytes(std::size_t n);

  // Derive an independent child stream (one trial = one stream).
  Rng fork() { return Rng(next_u64() ^ 0x9e3779b97f4a7c15ull); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace bioibe
