#include "bioibe/primes.hpp"

#include <cctype>
#include <stdexcept>

namespace bioibe::primes {

const Int& secp256k1_order() {
  static const Int p(
      "0xfffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364141");
  return p;
}

const Int& bls12_381_r() {
  static const Int p(
      "0x73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001");
  return p;
}

Int parse(const std::string& name_or_number) {
  if (name_or_number == "secp256k1") return secp256k1_order();
  if (name_or_number == "bls12-381") return bls12_381_r();
  try {
    Int p(name_or_number);  // handles decimal and 0x-prefixed hex
    if (p < 2) throw std::invalid_argument("prime must be >= 2");
    return p;
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("unknown prime name or malformed number: " +
                                name_or_number);
  }
}

std::string describe(const Int& p) {
  if (p == secp256k1_order()) return "secp256k1";
  if (p == bls12_381_r()) return "bls12-381";
  return p.str();
}

}  // namespace bioibe::primes
