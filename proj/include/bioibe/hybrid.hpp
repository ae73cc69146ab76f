#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bioibe/hashing.hpp"
#include "bioibe/scheme.hpp"

namespace bioibe {

class AuthenticationFailure : public std::runtime_error {
 public:
  AuthenticationFailure() : std::runtime_error("payload authentication failed") {}
};

// Byte-payload convenience on top of the group-element scheme: a random
// target-group element is encrypted as the KEM, and keys derived from its
// canonical serialization drive an authenticated stream cipher over the
// payload. The scheme proper only ever sees group elements.
struct HybridCiphertext {
  Ciphertext kem;
  std::vector<std::uint8_t> body;
  Digest tag{};
};

HybridCiphertext hybrid_encrypt(const PublicParams& pp,
                                const AttributeSet& w_prime,
                                const SketchPar& receiver_par,
                                std::span<const std::uint8_t> payload, Rng& rng);

// Opens with an already-recovered KEM element (honest decrypt or attack).
std::vector<std::uint8_t> hybrid_open(const GtElem& kem_element,
                                      const HybridCiphertext& ct);

// Honest path: refuses on insufficient overlap, then opens.
std::vector<std::uint8_t> hybrid_decrypt(const PublicParams& pp,
                                         const SecretKey& sk,
                                         const HybridCiphertext& ct);

}  // namespace bioibe
