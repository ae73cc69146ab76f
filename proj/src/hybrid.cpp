#include "bioibe/hybrid.hpp"

#include <cstring>

#include "bioibe/serialize.hpp"

namespace bioibe {

namespace {

Digest derive_key(const GtElem& kem_element, std::string_view label) {
  auto elem = canonical_bytes(kem_element);
  std::vector<std::uint8_t> input;
  input.reserve(label.size() + 1 + elem.size());
  input.insert(input.end(), label.begin(), label.end());
  input.push_back(0x00);
  input.insert(input.end(), elem.begin(), elem.end());
  return sha256(input);
}

void apply_keystream(const Digest& enc_key, std::span<const std::uint8_t> in,
                     std::vector<std::uint8_t>& out) {
  out.resize(in.size());
  std::uint32_t counter = 0;
  std::size_t done = 0;
  while (done < in.size()) {
    std::vector<std::uint8_t> block_input(enc_key.begin(), enc_key.end());
    block_input.push_back(static_cast<std::uint8_t>(counter >> 24));
    block_input.push_back(static_cast<std::uint8_t>(counter >> 16));
    block_input.push_back(static_cast<std::uint8_t>(counter >> 8));
    block_input.push_back(static_cast<std::uint8_t>(counter));
    Digest block = sha256(block_input);
    const std::size_t n = std::min(block.size(), in.size() - done);
    for (std::size_t i = 0; i < n; ++i) out[done + i] = in[done + i] ^ block[i];
    done += n;
    counter += 1;
  }
}

bool digests_equal(const Digest& a, const Digest& b) {
  unsigned diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff |= a[i] ^ b[i];
  return diff == 0;
}

}  // namespace

HybridCiphertext hybrid_encrypt(const PublicParams& pp,
                                const AttributeSet& w_prime,
                                const SketchPar& receiver_par,
                                std::span<const std::uint8_t> payload, Rng& rng) {
  GtElem kem_element = pp.group->random_target_element(rng);
  HybridCiphertext out{encrypt(pp, kem_element, w_prime, receiver_par, rng), {}, {}};
  Digest enc_key = derive_key(kem_element, "bioibe/dem-enc");
  Digest mac_key = derive_key(kem_element, "bioibe/dem-mac");
  apply_keystream(enc_key, payload, out.body);
  out.tag = hmac_sha256(mac_key, out.body);
  return out;
}

std::vector<std::uint8_t> hybrid_open(const GtElem& kem_element,
                                      const HybridCiphertext& ct) {
  Digest mac_key = derive_key(kem_element, "bioibe/dem-mac");
  if (!digests_equal(hmac_sha256(mac_key, ct.body), ct.tag))
    throw AuthenticationFailure();
  Digest enc_key = derive_key(kem_element, "bioibe/dem-enc");
  std::vector<std::uint8_t> payload;
  apply_keystream(enc_key, ct.body, payload);
  return payload;
}

std::vector<std::uint8_t> hybrid_decrypt(const PublicParams& pp,
                                         const SecretKey& sk,
                                         const HybridCiphertext& ct) {
  return hybrid_open(decrypt(pp, sk, ct.kem), ct);
}

}  // namespace bioibe
