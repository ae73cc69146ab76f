#include "bioibe/scalar.hpp"

#include <stdexcept>
#include <utility>

namespace bioibe {

Scalar::Scalar(Int value, Int modulus)
    : value_(std::move(value)), modulus_(std::move(modulus)) {
  if (modulus_ < 2) throw std::invalid_argument("Scalar: modulus must be >= 2");
  value_ %= modulus_;
  if (value_ < 0) value_ += modulus_;
}

Scalar Scalar::random(Rng& rng, const Int& p) { return Scalar(rng.below(p), p); }

Scalar Scalar::random_nonzero(Rng& rng, const Int& p) {
  return Scalar(rng.below_nonzero(p), p);
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (modulus_ != rhs.modulus_)
    throw std::invalid_argument("Scalar: operands have different moduli");
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  check_same_field(rhs);
  return Scalar(value_ + rhs.value_, modulus_);
}

Scalar Scalar::operator-(const Scalar& rhs) const {
  check_same_field(rhs);
  return Scalar(value_ - rhs.value_, modulus_);
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  check_same_field(rhs);
  return Scalar(value_ * rhs.value_, modulus_);
}

Scalar Scalar::operator-() const { return Scalar(-value_, modulus_); }

Scalar Scalar::inverse() const {
  if (value_ == 0) throw std::domain_error("Scalar: zero has no inverse");
  // p is prime, so a^(p-2) = a^(-1).
  return Scalar(boost::multiprecision::powm(value_, modulus_ - 2, modulus_),
                modulus_);
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  check_same_field(rhs);
  return *this * rhs.inverse();
}

Scalar Scalar::pow(const Int& exponent) const {
  if (exponent < 0) throw std::invalid_argument("Scalar::pow: negative exponent");
  return Scalar(boost::multiprecision::powm(value_, exponent, modulus_), modulus_);
}

bool Scalar::operator==(const Scalar& rhs) const {
  return modulus_ == rhs.modulus_ && value_ == rhs.value_;
}

bool Scalar::operator<(const Scalar& rhs) const {
  check_same_field(rhs);
  return value_ < rhs.value_;
}

}  // namespace bioibe
