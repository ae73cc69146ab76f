#include "bioibe/pairing.hpp"

#include <stdexcept>
#include <utility>

namespace bioibe {

namespace {

void check_same_group(const std::shared_ptr<const PairingGroup>& a,
                      const std::shared_ptr<const PairingGroup>& b) {
  if (!a || !b || a.get() != b.get())
    throw std::invalid_argument("group elements belong to different group instances");
}

}  // namespace

template <GroupSide Side>
Elem<Side> Elem<Side>::operator*(const Elem& rhs) const {
  check_same_group(group_, rhs.group_);
  return Elem(group_->op(Side, repr_, rhs.repr_), group_);
}

template <GroupSide Side>
Elem<Side> Elem<Side>::pow(const Scalar& exponent) const {
  if (exponent.modulus() != group_->order())
    throw std::invalid_argument("exponent modulus does not match group order");
  return Elem(group_->power(Side, repr_, exponent.value()), group_);
}

template <GroupSide Side>
Elem<Side> Elem<Side>::inverse() const {
  return Elem(group_->invert(Side, repr_), group_);
}

template <GroupSide Side>
bool Elem<Side>::is_identity() const {
  return repr_ == group_->identity_repr(Side);
}

template <GroupSide Side>
bool Elem<Side>::operator==(const Elem& rhs) const {
  check_same_group(group_, rhs.group_);
  return repr_ == rhs.repr_;
}

template class Elem<GroupSide::Source>;
template class Elem<GroupSide::Target>;

GElem PairingGroup::generator() const {
  return GElem(generator_repr(GroupSide::Source), shared_from_this());
}

GElem PairingGroup::identity() const {
  return GElem(identity_repr(GroupSide::Source), shared_from_this());
}

GtElem PairingGroup::target_identity() const {
  return GtElem(identity_repr(GroupSide::Target), shared_from_this());
}

GtElem PairingGroup::target_generator() const {
  return GtElem(generator_repr(GroupSide::Target), shared_from_this());
}

GtElem PairingGroup::pair(const GElem& u, const GElem& v) const {
  if (u.group().get() != this || v.group().get() != this)
    throw std::invalid_argument("pair: elements belong to a different group instance");
  return GtElem(pair_repr(u.repr(), v.repr()), shared_from_this());
}

GElem PairingGroup::random_element(Rng& rng) const {
  return GElem(random_repr(GroupSide::Source, rng), shared_from_this());
}

GtElem PairingGroup::random_target_element(Rng& rng) const {
  return GtElem(random_repr(GroupSide::Target, rng), shared_from_this());
}

GElem PairingGroup::element_from_repr(Int repr) const {
  if (!valid_repr(GroupSide::Source, repr))
    throw std::invalid_argument("invalid source-group element representation");
  return GElem(std::move(repr), shared_from_this());
}

GtElem PairingGroup::target_from_repr(Int repr) const {
  if (!valid_repr(GroupSide::Target, repr))
    throw std::invalid_argument("invalid target-group element representation");
  return GtElem(std::move(repr), shared_from_this());
}

TransparentPairing::TransparentPairing(Int prime_order)
    : order_(std::move(prime_order)) {
  if (order_ < 2)
    throw std::invalid_argument("TransparentPairing: order must be >= 2");
}

std::shared_ptr<const TransparentPairing> TransparentPairing::create(
    Int prime_order) {
  return std::shared_ptr<const TransparentPairing>(
      new TransparentPairing(std::move(prime_order)));
}

std::string TransparentPairing::name() const {
  return "transparent-" + order_.str();
}

Int TransparentPairing::op(GroupSide, const Int& a, const Int& b) const {
  Int r = a + b;
  if (r >= order_) r -= order_;
  return r;
}

Int TransparentPairing::power(GroupSide, const Int& a, const Int& exponent) const {
  return (a * (exponent % order_)) % order_;
}

Int TransparentPairing::invert(GroupSide, const Int& a) const {
  return a == 0 ? Int(0) : Int(order_ - a);
}

Int TransparentPairing::identity_repr(GroupSide) const { return 0; }

Int TransparentPairing::generator_repr(GroupSide) const { return 1; }

Int TransparentPairing::pair_repr(const Int& u, const Int& v) const {
  // e(g^u, g^v) = e(g,g)^(uv)
  return (u * v) % order_;
}

Int TransparentPairing::random_repr(GroupSide, Rng& rng) const {
  return rng.below(order_);
}

bool TransparentPairing::valid_repr(GroupSide, const Int& a) const {
  return a >= 0 && a < order_;
}

}  // namespace bioibe
