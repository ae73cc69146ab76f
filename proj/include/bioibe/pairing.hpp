#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "bioibe/bigint.hpp"
#include "bioibe/rng.hpp"
#include "bioibe/scalar.hpp"

namespace bioibe {

class PairingGroup;

enum class GroupSide : std::uint8_t { Source, Target };

// Element of the source group G (Side == Source) or target group G_T
// (Side == Target). The representation is backend-defined; elements hold a
// handle to their group and refuse to combine across group instances.
template <GroupSide Side>
class Elem {
 public:
  Elem(Int repr, std::shared_ptr<const PairingGroup> group)
      : repr_(std::move(repr)), group_(std::move(group)) {}

  const Int& repr() const { return repr_; }
  const std::shared_ptr<const PairingGroup>& group() const { return group_; }

  Elem operator*(const Elem& rhs) const;
  Elem operator/(const Elem& rhs) const { return *this * rhs.inverse(); }
  Elem pow(const Scalar& exponent) const;
  Elem inverse() const;
  bool is_identity() const;

  bool operator==(const Elem& rhs) const;
  bool operator!=(const Elem& rhs) const { return !(*this == rhs); }

 private:
  Int repr_;
  std::shared_ptr<const PairingGroup> group_;
};

using GElem = Elem<GroupSide::Source>;
using GtElem = Elem<GroupSide::Target>;

// Symmetric bilinear pairing context e : G x G -> G_T, both groups of prime
// order p. Scheme code only touches this interface plus Elem, so a real
// curve backend can slot in without changes above it.
class PairingGroup : public std::enable_shared_from_this<PairingGroup> {
 public:
  virtual ~PairingGroup() = default;

  virtual const Int& order() const = 0;
  virtual std::string name() const = 0;
  // Leading byte of the serialized form, per side.
  virtual std::uint8_t repr_tag(GroupSide side) const = 0;

  GElem generator() const;
  GElem identity() const;
  GtElem target_identity() const;
  // e(g, g); non-degeneracy demands this differ from target_identity().
  GtElem target_generator() const;

  GtElem pair(const GElem& u, const GElem& v) const;

  GElem random_element(Rng& rng) const;
  GtElem random_target_element(Rng& rng) const;

  GElem element_from_repr(Int repr) const;
  GtElem target_from_repr(Int repr) const;

  // Backend ops on raw representations.
  virtual Int op(GroupSide side, const Int& a, const Int& b) const = 0;
  virtual Int power(GroupSide side, const Int& a, const Int& exponent) const = 0;
  virtual Int invert(GroupSide side, const Int& a) const = 0;
  virtual Int identity_repr(GroupSide side) const = 0;
  virtual Int generator_repr(GroupSide side) const = 0;
  virtual Int pair_repr(const Int& u, const Int& v) const = 0;
  virtual Int random_repr(GroupSide side, Rng& rng) const = 0;
  virtual bool valid_repr(GroupSide side, const Int& a) const = 0;
};

// Normative desk-scale backend: an element of G is stored as its discrete
// log d meaning g^d, an element of G_T as its log base e(g,g). The group law
// adds logs mod p and the pairing multiplies them, which makes every
// exponent identity in the scheme directly observable in tests.
class TransparentPairing final : public PairingGroup {
 public:
  static std::shared_ptr<const TransparentPairing> create(Int prime_order);

  const Int& order() const override { return order_; }
  std::string name() const override;
  std::uint8_t repr_tag(GroupSide side) const override {
    return side == GroupSide::Source ? kSourceTag : kTargetTag;
  }

  Int op(GroupSide side, const Int& a, const Int& b) const override;
  Int power(GroupSide side, const Int& a, const Int& exponent) const override;
  Int invert(GroupSide side, const Int& a) const override;
  Int identity_repr(GroupSide side) const override;
  Int generator_repr(GroupSide side) const override;
  Int pair_repr(const Int& u, const Int& v) const override;
  Int random_repr(GroupSide side, Rng& rng) const override;
  bool valid_repr(GroupSide side, const Int& a) const override;

  static constexpr std::uint8_t kSourceTag = 0x01;
  static constexpr std::uint8_t kTargetTag = 0x02;

 private:
  explicit TransparentPairing(Int prime_order);

  Int order_;
};

// The discrete log of a transparent-backend element; test-mode introspection.
template <GroupSide Side>
const Int& discrete_log(const Elem<Side>& e) {
  return e.repr();
}

}  // namespace bioibe
