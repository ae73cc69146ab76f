#include "bioibe/attack.hpp"

#include "bioibe/errors.hpp"
#include "bioibe/polynomial.hpp"

namespace bioibe {

AttackTranscript universal_decrypt(const PublicParams& pp, const SecretKey& sk,
                                   const Ciphertext& ct) {
  if (sk.shares.size() < pp.d)
    throw InsufficientShares(sk.shares.size(), pp.d);

  AttributeSet w = sk.attribute_set();
  // The key holder knows its own attributes and identity, so it can
  // recompute the binding hash the PKG used.
  const AttributeSet* bound_attrs =
      sk.binding == Binding::AttributesAndIdentity ? &w : nullptr;
  Scalar h = hash_to_scalar_h1(sk.identity, bound_attrs, pp.group->order());

  // u_i = d_{i,1} / d_{i,2}^{H1(..)} = g1^{q(mu_i)}
  std::vector<std::pair<Scalar, GElem>> stripped;
  stripped.reserve(sk.shares.size());
  for (const auto& share : sk.shares)
    stripped.emplace_back(share.attr, share.d1 / share.d2.pow(h));

  // S = the d smallest attributes of w (shares are kept sorted).
  std::vector<Scalar> subset;
  subset.reserve(pp.d);
  for (std::uint32_t i = 0; i < pp.d; ++i) subset.push_back(sk.shares[i].attr);

  const Scalar zero = Scalar::zero(pp.group->order());
  GtElem denom = pp.group->target_identity();
  for (std::uint32_t i = 0; i < pp.d; ++i) {
    Scalar coeff = lagrange_coeff(subset[i], subset, zero);
    denom = denom * pp.group->pair(ct.c1, stripped[i].second).pow(coeff);
  }

  // C3 / prod e(C1, u_i)^{Delta_i} = m * e(g1,g2)^r / e(g,g1)^{rs} = m
  GtElem recovered = ct.c3 / denom;
  return AttackTranscript{ct.w_prime, std::move(w), std::move(recovered),
                          std::move(subset), std::move(stripped)};
}

}  // namespace bioibe
