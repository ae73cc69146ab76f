#pragma once

#include <string>

#include "bioibe/bigint.hpp"

namespace bioibe::primes {

// Order of the secp256k1 group: the default 256-bit prime modulus.
const Int& secp256k1_order();

// Scalar-field order of BLS12-381 (255-bit), the usual pairing-curve choice.
const Int& bls12_381_r();

// Accepts a registry name ("secp256k1", "bls12-381"), a decimal literal, or
// a 0x-prefixed hex literal. Throws std::invalid_argument on anything else
// or on values < 2.
Int parse(const std::string& name_or_number);

// Name for a known prime, or its decimal representation.
std::string describe(const Int& p);

}  // namespace bioibe::primes
