#pragma once

#include <cstdint>
#include <vector>

#include "bioibe/bitstring.hpp"
#include "bioibe/rng.hpp"
#include "bioibe/scalar.hpp"

namespace bioibe {

// A user's attribute set w = (mu_1, ..., mu_n): n distinct nonzero scalars,
// kept sorted ascending. Zero is excluded because interpolation reserves
// the point 0 for the shared secret, and duplicates would break Lagrange
// denominators.
class AttributeSet {
 public:
  static AttributeSet from_values(std::vector<Scalar> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<Scalar>& values() const { return values_; }
  bool contains(const Scalar& v) const;

  // Sorted ascending; both inputs must share a modulus.
  static std::vector<Scalar> intersection(const AttributeSet& a,
                                          const AttributeSet& b);

  bool operator==(const AttributeSet&) const = default;

 private:
  explicit AttributeSet(std::vector<Scalar> sorted) : values_(std::move(sorted)) {}
  std::vector<Scalar> values_;
};

// Layout of a template slot: each attribute occupies slot_bits bits, of
// which the low value_bits bits of the attribute value are written
// big-endian first and the rest stay zero.
struct AttributeEncoding {
  std::uint32_t count = 8;       // n, attributes per set
  std::uint32_t slot_bits = 32;  // W
  std::uint32_t value_bits = 16; // B

  std::uint32_t template_bits() const { return count * slot_bits; }
  void validate() const;
};

// Sorted concatenation of the fixed-width attribute encodings.
BitString attrs_to_template(const AttributeSet& w, const AttributeEncoding& enc);

// The feature universe: slot i of a template draws its value from
// (i * 2^B, i * 2^B + 2^B - 1], one value per slot. Inside this universe a
// shared attribute value lands in the same slot of both templates, so sets
// overlapping in >= d attributes give templates within (n - d) * B bits of
// each other.
namespace universe {

// Value for feature slot `slot` with in-slot offset in [1, 2^B - 1].
Scalar value(const AttributeEncoding& enc, const Int& p, std::uint32_t slot,
             std::uint64_t offset);

bool contains(const AttributeEncoding& enc, const AttributeSet& w);

AttributeSet random_set(const AttributeEncoding& enc, const Int& p, Rng& rng);

// A random set agreeing with `base` on exactly `overlap` slots and
// guaranteed to differ everywhere else.
AttributeSet random_set_with_overlap(const AttributeEncoding& enc, const Int& p,
                                     Rng& rng, const AttributeSet& base,
                                     std::uint32_t overlap);

}  // namespace universe

}  // namespace bioibe
