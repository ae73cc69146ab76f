#pragma once

#include <cstdint>
#include <vector>

namespace bioibe {

// Fixed-length bit string, packed MSB-first (bit 0 is the high bit of
// byte 0). Unused trailing bits of the last byte stay zero.
class BitString {
 public:
  explicit BitString(std::size_t nbits);
  static BitString from_bytes(std::vector<std::uint8_t> packed, std::size_t nbits);

  std::size_t size() const { return nbits_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool v);
  void flip(std::size_t i) { set(i, !get(i)); }

  BitString operator^(const BitString& rhs) const;
  BitString complement() const;
  std::size_t weight() const;
  static std::size_t distance(const BitString& a, const BitString& b);

  const std::vector<std::uint8_t>& bytes() const { return packed_; }

  bool operator==(const BitString& rhs) const = default;

 private:
  std::size_t nbits_;
  std::vector<std::uint8_t> packed_;
};

}  // namespace bioibe
