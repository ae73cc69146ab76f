#include "bioibe/bitstring.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace bioibe {

BitString::BitString(std::size_t nbits)
    : nbits_(nbits), packed_((nbits + 7) / 8, 0) {}

BitString BitString::from_bytes(std::vector<std::uint8_t> packed,
                                std::size_t nbits) {
  if (packed.size() != (nbits + 7) / 8)
    throw std::invalid_argument("BitString::from_bytes: wrong byte count");
  if (nbits % 8 != 0) {
    const std::uint8_t tail_mask =
        static_cast<std::uint8_t>(0xff >> (nbits % 8));
    if ((packed.back() & tail_mask) != 0)
      throw std::invalid_argument("BitString::from_bytes: trailing bits set");
  }
  BitString out(nbits);
  out.packed_ = std::move(packed);
  return out;
}

bool BitString::get(std::size_t i) const {
  if (i >= nbits_) throw std::out_of_range("BitString::get");
  return (packed_[i / 8] >> (7 - i % 8)) & 1;
}

void BitString::set(std::size_t i, bool v) {
  if (i >= nbits_) throw std::out_of_range("BitString::set");
  const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - i % 8));
  if (v)
    packed_[i / 8] |= mask;
  else
    packed_[i / 8] &= static_cast<std::uint8_t>(~mask);
}

BitString BitString::operator^(const BitString& rhs) const {
  if (nbits_ != rhs.nbits_)
    throw std::invalid_argument("BitString: length mismatch");
  BitString out(nbits_);
  for (std::size_t i = 0; i < packed_.size(); ++i)
    out.packed_[i] = packed_[i] ^ rhs.packed_[i];
  return out;
}

BitString BitString::complement() const {
  BitString out(nbits_);
  for (std::size_t i = 0; i < packed_.size(); ++i)
    out.packed_[i] = static_cast<std::uint8_t>(~packed_[i]);
  if (nbits_ % 8 != 0)
    out.packed_.back() &= static_cast<std::uint8_t>(0xff << (8 - nbits_ % 8));
  return out;
}

std::size_t BitString::weight() const {
  std::size_t w = 0;
  for (auto b : packed_) w += std::popcount(b);
  return w;
}

std::size_t BitString::distance(const BitString& a, const BitString& b) {
  return (a ^ b).weight();
}

}  // namespace bioibe
