#pragma once

#include <utility>
#include <vector>

#include "bioibe/scheme.hpp"

namespace bioibe {

// Record of one universal-decryption run: which identity the ciphertext
// targeted, which key was used, the identity-stripped share values
// u_i = d_{i,1} / d_{i,2}^{H1(..)} = g1^{q(mu_i)}, the interpolation subset,
// and the recovered plaintext.
struct AttackTranscript {
  AttributeSet target_w_prime;
  AttributeSet queried_w;
  GtElem recovered;
  std::vector<Scalar> chosen_subset;
  std::vector<std::pair<Scalar, GElem>> stripped;  // mu_i -> g1^{q(mu_i)}
};

// Decrypts any honestly formed ciphertext with any honestly extracted key,
// with no overlap requirement between the key's attributes and the
// ciphertext's: the key holder strips its own binding-hash component from
// each d1 share, leaving g1^{q(mu_i)}, and interpolates e(C1, g1^{q(0)}) =
// e(g1, g2)^r out of C3. Throws InsufficientShares when the key carries
// fewer than d shares.
AttackTranscript universal_decrypt(const PublicParams& pp, const SecretKey& sk,
                                   const Ciphertext& ct);

}  // namespace bioibe
