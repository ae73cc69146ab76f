#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bioibe/attributes.hpp"
#include "bioibe/errors.hpp"
#include "bioibe/fuzzy_extractor.hpp"
#include "bioibe/pairing.hpp"
#include "bioibe/polynomial.hpp"
#include "bioibe/primes.hpp"
#include "bioibe/rng.hpp"

namespace bioibe {

// How key and ciphertext components bind to the receiver. IdentityOnly is
// the corrected scheme (the hash covers the fuzzy-extracted identity
// alone); AttributesAndIdentity additionally hashes the attribute set, the
// original binding whose honest decryption fails across distinct attribute
// sets even with enough overlap.
enum class Binding : std::uint8_t { IdentityOnly, AttributesAndIdentity };

struct SchemeConfig {
  Int prime = primes::secp256k1_order();
  std::uint32_t n = 8;  // attributes per identity
  std::uint32_t d = 4;  // decryption threshold
  Binding binding = Binding::IdentityOnly;
  std::uint32_t slot_bits = 32;
  std::uint32_t value_bits = 16;

  AttributeEncoding encoding() const { return {n, slot_bits, value_bits}; }
  FuzzyParams fuzzy_params() const;
  void validate() const;
};

struct PublicParams {
  std::shared_ptr<const PairingGroup> group;
  GElem g;
  GElem g1;
  GElem g2;  // g^s
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  Binding binding = Binding::IdentityOnly;
  AttributeEncoding encoding;
  FuzzyParams fuzzy;

  FuzzyExtractor extractor() const { return FuzzyExtractor(fuzzy); }
};

struct MasterKey {
  Scalar s;  // nonzero
};

// One attribute's key material: d1 = (g1 * g^h)^{q(attr)}, d2 = g^{q(attr)}.
struct KeyShare {
  Scalar attr;
  GElem d1;
  GElem d2;
};

struct SecretKey {
  std::vector<KeyShare> shares;  // sorted by attribute, one per attribute
  Identity identity;
  Binding binding = Binding::IdentityOnly;

  AttributeSet attribute_set() const;
  const KeyShare& share_for(const Scalar& attr) const;
};

struct Ciphertext {
  AttributeSet w_prime;
  GElem c1;  // g^r
  GElem c2;  // (g^{H1(ID')})^r
  GtElem c3; // m * e(g1, g2)^r
};

struct ExtractResult {
  SecretKey key;
  SketchPar par;
};

// H1 into Z_p^*: hashes the identity alone, or the canonical serialization
// of the attribute set followed by the identity when `attrs` is given.
Scalar hash_to_scalar_h1(const Identity& id, const AttributeSet* attrs,
                         const Int& p);

// The binding hash the scheme uses for this key/ciphertext side, following
// the system-wide binding mode.
Scalar binding_hash(const PublicParams& pp, const Identity& id,
                    const AttributeSet& attrs);

std::pair<PublicParams, MasterKey> setup(const SchemeConfig& config, Rng& rng);

ExtractResult extract(const PublicParams& pp, const MasterKey& msk,
                      const AttributeSet& w, Rng& rng);

Ciphertext encrypt(const PublicParams& pp, const GtElem& m,
                   const AttributeSet& w_prime, const SketchPar& receiver_par,
                   Rng& rng);

// Honest decryption: refuses (InsufficientOverlap) when |w cap w'| < d,
// otherwise interpolates over the d lexicographically smallest common
// attributes.
GtElem decrypt(const PublicParams& pp, const SecretKey& sk, const Ciphertext& ct);

// Same quotient with an explicit interpolation subset S, which must be d
// common attributes. Decryption does not depend on the choice in the
// identity-only binding; exposed so tests can check exactly that.
GtElem decrypt_with_subset(const PublicParams& pp, const SecretKey& sk,
                           const Ciphertext& ct, std::span<const Scalar> subset);

}  // namespace bioibe
