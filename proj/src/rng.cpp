#include "bioibe/rng.hpp"

#include <stdexcept>

namespace bioibe {

Rng Rng::from_entropy() {
  std::random_device rd;
  std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  return Rng(seed);
}

Int Rng::below(const Int& bound) {
  if (bound <= 0) throw std::invalid_argument("Rng::below: bound must be positive");
  if (bound == 1) return 0;
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  const unsigned words = (bits + 63) / 64;
  const unsigned top_bits = bits - (words - 1) * 64;
  const std::uint64_t top_mask =
      top_bits == 64 ? ~0ull : ((1ull << top_bits) - 1);
  // Rejection sampling over the minimal bit width keeps the draw uniform.
  for (;;) {
    Int x = next_u64() & top_mask;
    for (unsigned i = 1; i < words; ++i) {
      x <<= 64;
      x += next_u64();
    }
    if (x < bound) return x;
  }
}

Int Rng::below_nonzero(const Int& bound) {
  if (bound < 2) throw std::invalid_argument("Rng::below_nonzero: bound must be >= 2");
  return 1 + below(bound - 1);
}

std::vector<std::uint8_t> Rng::bytes(std::size_t n) {
  std::vector<std::uint8_t> out(n);
  std::size_t i = 0;
  while (i < n) {
    std::uint64_t w = next_u64();
    for (int b = 0; b < 8 && i < n; ++b, ++i) {
      out[i] = static_cast<std::uint8_t>(w & 0xff);
      w >>= 8;
    }
  }
  return out;
}

}  // namespace bioibe
