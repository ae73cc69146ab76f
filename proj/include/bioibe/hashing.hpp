#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "bioibe/bigint.hpp"
#include "bioibe/scalar.hpp"

namespace bioibe {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);

Digest hmac_sha256(std::span<const std::uint8_t> key,
                   std::span<const std::uint8_t> data);

// Deterministic hash into Z_p^*. A wide (512-bit) digest of
// (domain || counter || data) is reduced mod p; a zero result bumps the
// counter and resamples, so the output is never zero.
Scalar hash_to_nonzero_scalar(std::span<const std::uint8_t> data, const Int& p,
                              std::string_view domain);

}  // namespace bioibe
