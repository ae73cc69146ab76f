#include "bioibe/polynomial.hpp"

#include <stdexcept>

namespace bioibe {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("Polynomial: needs at least the constant term");
  for (const auto& c : coeffs_)
    if (c.modulus() != coeffs_[0].modulus())
      throw std::invalid_argument("Polynomial: mixed coefficient moduli");
}

Polynomial Polynomial::sample(Rng& rng, std::size_t degree,
                              const Scalar& constant_term) {
  std::vector<Scalar> coeffs;
  coeffs.reserve(degree + 1);
  coeffs.push_back(constant_term);
  for (std::size_t k = 0; k < degree; ++k)
    coeffs.push_back(Scalar::random(rng, constant_term.modulus()));
  return Polynomial(std::move(coeffs));
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

namespace {

void check_points(const std::vector<Scalar>& points) {
  for (std::size_t a = 0; a < points.size(); ++a) {
    if (points[a].is_zero())
      throw std::invalid_argument("interpolation points must be nonzero");
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (points[a] == points[b])
        throw std::invalid_argument("interpolation points must be distinct");
  }
}

}  // namespace

Scalar lagrange_coeff(const Scalar& i, const std::vector<Scalar>& s_points,
                      const Scalar& x) {
  if (s_points.empty())
    throw std::invalid_argument("lagrange_coeff: empty point set");
  check_points(s_points);
  bool member = false;
  for (const auto& j : s_points)
    if (j == i) member = true;
  if (!member) throw std::invalid_argument("lagrange_coeff: i is not in S");

  Scalar acc = Scalar::one(i.modulus());
  for (const auto& j : s_points) {
    if (j == i) continue;
    acc = acc * ((x - j) / (i - j));
  }
  return acc;
}

Scalar interpolate_at_zero(const std::vector<std::pair<Scalar, Scalar>>& shares) {
  if (shares.empty())
    throw std::invalid_argument("interpolate_at_zero: no shares");
  std::vector<Scalar> points;
  points.reserve(shares.size());
  for (const auto& [pt, val] : shares) points.push_back(pt);
  check_points(points);

  const Int& p = points.front().modulus();
  Scalar zero = Scalar::zero(p);
  Scalar acc = zero;
  for (const auto& [pt, val] : shares)
    acc = acc + val * lagrange_coeff(pt, points, zero);
  return acc;
}

GElem interpolate_at_zero_in_exponent(
    const std::vector<std::pair<Scalar, GElem>>& shares) {
  if (shares.empty())
    throw std::invalid_argument("interpolate_at_zero_in_exponent: no shares");
  std::vector<Scalar> points;
  points.reserve(shares.size());
  for (const auto& [pt, val] : shares) points.push_back(pt);
  check_points(points);

  const auto& group = shares.front().second.group();
  Scalar zero = Scalar::zero(points.front().modulus());
  GElem acc = group->identity();
  for (const auto& [pt, val] : shares)
    acc = acc * val.pow(lagrange_coeff(pt, points, zero));
  return acc;
}

}  // namespace bioibe
