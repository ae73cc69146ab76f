#pragma once

#include <string>

#include "bioibe/bigint.hpp"
#include "bioibe/rng.hpp"

namespace bioibe {

// Element of Z_p for a prime modulus p. Immutable value type; every
// operation reduces into [0, p). Operands must share the same modulus.
class Scalar {
 public:
  Scalar(Int value, Int modulus);

  static Scalar zero(const Int& p) { return Scalar(0, p); }
  static Scalar one(const Int& p) { return Scalar(1, p); }

  // Uniform over [0, p).
  static Scalar random(Rng& rng, const Int& p);
  // Uniform over [1, p), i.e. Z_p^*.
  static Scalar random_nonzero(Rng& rng, const Int& p);

  const Int& value() const { return value_; }
  const Int& modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator-() const;

  // Defined for nonzero values only; throws std::domain_error on zero.
  Scalar inverse() const;
  Scalar operator/(const Scalar& rhs) const;

  // value^e mod p for a non-negative integer exponent.
  Scalar pow(const Int& exponent) const;

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }
  // Ordering by residue value; moduli must match. Gives attribute sets a
  // canonical ascending order.
  bool operator<(const Scalar& rhs) const;

  std::string to_string() const { return value_.str(); }

 private:
  void check_same_field(const Scalar& rhs) const;

  Int value_;
  Int modulus_;
};

}  // namespace bioibe
