#include "bioibe/attributes.hpp"

#include <algorithm>
#include <stdexcept>

namespace bioibe {

AttributeSet AttributeSet::from_values(std::vector<Scalar> values) {
  if (values.empty())
    throw std::invalid_argument("AttributeSet: must not be empty");
  for (const auto& v : values) {
    if (v.modulus() != values.front().modulus())
      throw std::invalid_argument("AttributeSet: mixed moduli");
    if (v.is_zero())
      throw std::invalid_argument("AttributeSet: attribute value 0 is reserved");
  }
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] == values[i - 1])
      throw std::invalid_argument("AttributeSet: duplicate attribute value");
  return AttributeSet(std::move(values));
}

bool AttributeSet::contains(const Scalar& v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

std::vector<Scalar> AttributeSet::intersection(const AttributeSet& a,
                                               const AttributeSet& b) {
  std::vector<Scalar> out;
  std::set_intersection(a.values_.begin(), a.values_.end(), b.values_.begin(),
                        b.values_.end(), std::back_inserter(out));
  return out;
}

void AttributeEncoding::validate() const {
  if (count == 0) throw std::invalid_argument("AttributeEncoding: count must be positive");
  if (value_bits == 0 || value_bits > 63)
    throw std::invalid_argument("AttributeEncoding: value_bits must be in [1, 63]");
  if (slot_bits < value_bits)
    throw std::invalid_argument("AttributeEncoding: slot_bits must be >= value_bits");
}

BitString attrs_to_template(const AttributeSet& w, const AttributeEncoding& enc) {
  enc.validate();
  if (w.size() != enc.count)
    throw std::invalid_argument("attrs_to_template: attribute count mismatch");
  BitString out(enc.template_bits());
  const Int mask = (Int(1) << enc.value_bits) - 1;
  for (std::uint32_t i = 0; i < enc.count; ++i) {
    const std::uint64_t low =
        static_cast<std::uint64_t>(w.values()[i].value() & mask);
    const std::size_t base = static_cast<std::size_t>(i) * enc.slot_bits;
    for (std::uint32_t bit = 0; bit < enc.value_bits; ++bit) {
      const bool v = (low >> (enc.value_bits - 1 - bit)) & 1;
      if (v) out.set(base + bit, true);
    }
  }
  return out;
}

namespace universe {

Scalar value(const AttributeEncoding& enc, const Int& p, std::uint32_t slot,
             std::uint64_t offset) {
  enc.validate();
  if (slot >= enc.count) throw std::invalid_argument("universe::value: bad slot");
  const std::uint64_t span = 1ull << enc.value_bits;
  if (offset == 0 || offset >= span)
    throw std::invalid_argument("universe::value: offset out of range");
  Int v = Int(slot) * span + offset;
  if (v >= p)
    throw std::invalid_argument("universe::value: value exceeds the field");
  return Scalar(v, p);
}

bool contains(const AttributeEncoding& enc, const AttributeSet& w) {
  if (w.size() != enc.count) return false;
  const std::uint64_t span = 1ull << enc.value_bits;
  for (std::uint32_t i = 0; i < enc.count; ++i) {
    const Int& v = w.values()[i].value();
    if (v <= Int(i) * span || v >= Int(i) * span + span) return false;
  }
  return true;
}

AttributeSet random_set(const AttributeEncoding& enc, const Int& p, Rng& rng) {
  const std::uint64_t span = 1ull << enc.value_bits;
  std::vector<Scalar> vals;
  vals.reserve(enc.count);
  for (std::uint32_t i = 0; i < enc.count; ++i) {
    std::uint64_t offset =
        1 + static_cast<std::uint64_t>(rng.below(Int(span - 1)));
    vals.push_back(value(enc, p, i, offset));
  }
  return AttributeSet::from_values(std::move(vals));
}

AttributeSet random_set_with_overlap(const AttributeEncoding& enc, const Int& p,
                                     Rng& rng, const AttributeSet& base,
                                     std::uint32_t overlap) {
  if (overlap > enc.count)
    throw std::invalid_argument("random_set_with_overlap: overlap > count");
  if (!contains(enc, base))
    throw std::invalid_argument("random_set_with_overlap: base outside universe");
  const std::uint64_t span = 1ull << enc.value_bits;
  if (span - 1 < 2 && overlap < enc.count)
    throw std::invalid_argument("random_set_with_overlap: universe too small");

  // Choose which slots keep the base value.
  std::vector<std::uint32_t> slots(enc.count);
  for (std::uint32_t i = 0; i < enc.count; ++i) slots[i] = i;
  for (std::uint32_t i = 0; i < enc.count; ++i) {
    auto j = i + static_cast<std::uint32_t>(rng.below(Int(enc.count - i)));
    std::swap(slots[i], slots[j]);
  }

  std::vector<bool> keep(enc.count, false);
  for (std::uint32_t i = 0; i < overlap; ++i) keep[slots[i]] = true;

  std::vector<Scalar> vals;
  vals.reserve(enc.count);
  for (std::uint32_t i = 0; i < enc.count; ++i) {
    if (keep[i]) {
      vals.push_back(base.values()[i]);
      continue;
    }
    const Int base_val = base.values()[i].value();
    for (;;) {
      std::uint64_t offset =
          1 + static_cast<std::uint64_t>(rng.below(Int(span - 1)));
      Scalar candidate = value(enc, p, i, offset);
      if (candidate.value() != base_val) {
        vals.push_back(candidate);
        break;
      }
    }
  }
  return AttributeSet::from_values(std::move(vals));
}

}  // namespace universe

}  // namespace bioibe
