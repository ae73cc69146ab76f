#pragma once

#include <utility>
#include <vector>

#include "bioibe/pairing.hpp"
#include "bioibe/rng.hpp"
#include "bioibe/scalar.hpp"

namespace bioibe {

// Polynomial over Z_p, coeffs[0] the constant term. Degree = #coeffs - 1.
class Polynomial {
 public:
  explicit Polynomial(std::vector<Scalar> coeffs);

  // Random polynomial of the given degree with a fixed constant term; the
  // remaining coefficients are uniform over Z_p (zero included).
  static Polynomial sample(Rng& rng, std::size_t degree, const Scalar& constant_term);

  Scalar eval(const Scalar& x) const;
  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

 private:
  std::vector<Scalar> coeffs_;
};

// Lagrange coefficient Delta_{i,S}(x) = prod_{j in S, j != i} (x - j) / (i - j).
// Requires i in S; the elements of S distinct and nonzero. |S| = 1 gives 1.
Scalar lagrange_coeff(const Scalar& i, const std::vector<Scalar>& s_points,
                      const Scalar& x);

// Plain-field interpolation at x = 0 from point/value shares.
Scalar interpolate_at_zero(const std::vector<std::pair<Scalar, Scalar>>& shares);

// prod_i value_i ^ Delta_{point_i, S}(0) over S = {point_i}. If the values
// are g^{q(point_i)} for a polynomial q of degree < #shares, this is g^{q(0)}.
GElem interpolate_at_zero_in_exponent(
    const std::vector<std::pair<Scalar, GElem>>& shares);

}  // namespace bioibe
