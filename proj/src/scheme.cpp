#include "bioibe/scheme.hpp"

#include <algorithm>
#include <stdexcept>

#include "bioibe/hashing.hpp"
#include "bioibe/serialize.hpp"

namespace bioibe {

FuzzyParams SchemeConfig::fuzzy_params() const {
  FuzzyParams fp;
  fp.template_bits = n * slot_bits;
  // Sets overlapping in >= d universe attributes differ in at most
  // (n - d) slots, each by at most value_bits bits.
  fp.tolerance = (n - d) * value_bits;
  fp.block_bits = fp.template_bits;
  return fp;
}

void SchemeConfig::validate() const {
  if (prime < 101)
    throw std::invalid_argument("config: prime must be at least 101");
  if (n == 0) throw std::invalid_argument("config: n must be positive");
  if (d < 1 || d > n) throw std::invalid_argument("config: need 1 <= d <= n");
  encoding().validate();
  fuzzy_params().validate();
  // Universe values must stay inside Z_p and leave room for the in-slot
  // distinctness the attack's disjoint query sets rely on.
  if ((Int(n) << value_bits) >= prime)
    throw std::invalid_argument("config: attribute universe exceeds the field");
}

AttributeSet SecretKey::attribute_set() const {
  std::vector<Scalar> vals;
  vals.reserve(shares.size());
  for (const auto& sh : shares) vals.push_back(sh.attr);
  return AttributeSet::from_values(std::move(vals));
}

const KeyShare& SecretKey::share_for(const Scalar& attr) const {
  for (const auto& sh : shares)
    if (sh.attr == attr) return sh;
  throw std::invalid_argument("SecretKey: no share for that attribute");
}

Scalar hash_to_scalar_h1(const Identity& id, const AttributeSet* attrs,
                         const Int& p) {
  std::vector<std::uint8_t> payload;
  if (attrs != nullptr) {
    auto attr_bytes = canonical_bytes(*attrs);
    payload.insert(payload.end(), attr_bytes.begin(), attr_bytes.end());
  }
  payload.insert(payload.end(), id.id_bytes.begin(), id.id_bytes.end());
  return hash_to_nonzero_scalar(payload, p, "bioibe/h1");
}

Scalar binding_hash(const PublicParams& pp, const Identity& id,
                    const AttributeSet& attrs) {
  const AttributeSet* w =
      pp.binding == Binding::AttributesAndIdentity ? &attrs : nullptr;
  return hash_to_scalar_h1(id, w, pp.group->order());
}

std::pair<PublicParams, MasterKey> setup(const SchemeConfig& config, Rng& rng) {
  config.validate();
  auto group = TransparentPairing::create(config.prime);

  Scalar s = Scalar::random_nonzero(rng, config.prime);
  GElem g = group->generator();
  GElem g1 = group->random_element(rng);
  GElem g2 = g.pow(s);

  PublicParams pp{group,    g,
                  g1,       g2,
                  config.n, config.d,
                  config.binding, config.encoding(),
                  config.fuzzy_params()};
  return {std::move(pp), MasterKey{std::move(s)}};
}

ExtractResult extract(const PublicParams& pp, const MasterKey& msk,
                      const AttributeSet& w, Rng& rng) {
  if (w.size() != pp.n)
    throw std::invalid_argument("extract: attribute set has wrong cardinality");
  if (w.values().front().modulus() != pp.group->order())
    throw std::invalid_argument("extract: attribute field mismatch");

  // ID = H(b), PAR = Gen(b) from the template concatenation.
  BitString b = attrs_to_template(w, pp.encoding);
  GenResult gen = pp.extractor().gen(b);

  Scalar h = binding_hash(pp, gen.id, w);
  GElem base = pp.g1 * pp.g.pow(h);  // g1 * g^{H1(..)}

  // Random degree d-1 polynomial with q(0) = s.
  Polynomial q = Polynomial::sample(rng, pp.d - 1, msk.s);

  SecretKey sk;
  sk.identity = gen.id;
  sk.binding = pp.binding;
  sk.shares.reserve(w.size());
  for (const auto& attr : w.values()) {
    Scalar qi = q.eval(attr);
    sk.shares.push_back(KeyShare{attr, base.pow(qi), pp.g.pow(qi)});
  }
  return ExtractResult{std::move(sk), std::move(gen.par)};
}

Ciphertext encrypt(const PublicParams& pp, const GtElem& m,
                   const AttributeSet& w_prime, const SketchPar& receiver_par,
                   Rng& rng) {
  if (w_prime.size() != pp.n)
    throw std::invalid_argument("encrypt: attribute set has wrong cardinality");
  if (w_prime.values().front().modulus() != pp.group->order())
    throw std::invalid_argument("encrypt: attribute field mismatch");

  BitString b_prime = attrs_to_template(w_prime, pp.encoding);
  Identity id_prime = pp.extractor().rep(b_prime, receiver_par);
  Scalar h_prime = binding_hash(pp, id_prime, w_prime);

  Scalar r = Scalar::random_nonzero(rng, pp.group->order());
  GElem c1 = pp.g.pow(r);
  GElem c2 = pp.g.pow(h_prime).pow(r);
  GtElem c3 = m * pp.group->pair(pp.g1, pp.g2).pow(r);
  return Ciphertext{w_prime, std::move(c1), std::move(c2), std::move(c3)};
}

namespace {

// prod_{mu in S} share(mu).dX ^ Delta_{mu,S}(0) for both share components.
std::pair<GElem, GElem> interpolated_share_products(
    const PublicParams& pp, const SecretKey& sk, std::span<const Scalar> subset) {
  std::vector<Scalar> points(subset.begin(), subset.end());
  const Scalar zero = Scalar::zero(pp.group->order());
  GElem prod_d1 = pp.group->identity();
  GElem prod_d2 = pp.group->identity();
  for (const auto& mu : points) {
    const KeyShare& share = sk.share_for(mu);
    Scalar coeff = lagrange_coeff(mu, points, zero);
    prod_d1 = prod_d1 * share.d1.pow(coeff);
    prod_d2 = prod_d2 * share.d2.pow(coeff);
  }
  return {std::move(prod_d1), std::move(prod_d2)};
}

}  // namespace

GtElem decrypt_with_subset(const PublicParams& pp, const SecretKey& sk,
                           const Ciphertext& ct, std::span<const Scalar> subset) {
  if (subset.size() != pp.d)
    throw std::invalid_argument("decrypt: interpolation subset must have d elements");
  AttributeSet w = sk.attribute_set();
  for (const auto& mu : subset)
    if (!w.contains(mu) || !ct.w_prime.contains(mu))
      throw std::invalid_argument("decrypt: subset not contained in both attribute sets");

  auto [prod_d1, prod_d2] = interpolated_share_products(pp, sk, subset);
  // C3 * e(C2, prod d2^Delta) / e(C1, prod d1^Delta)
  return ct.c3 * pp.group->pair(ct.c2, prod_d2) / pp.group->pair(ct.c1, prod_d1);
}

GtElem decrypt(const PublicParams& pp, const SecretKey& sk, const Ciphertext& ct) {
  AttributeSet w = sk.attribute_set();
  std::vector<Scalar> common = AttributeSet::intersection(w, ct.w_prime);
  if (common.size() < pp.d) throw InsufficientOverlap(common.size(), pp.d);
  // Lexicographically smallest d common attributes.
  common.erase(common.begin() + pp.d, common.end());
  return decrypt_with_subset(pp, sk, ct, common);
}

}  // namespace bioibe
