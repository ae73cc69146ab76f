#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "bioibe/bitstring.hpp"

namespace bioibe {

// A user template, a concatenation of fixed-width attribute encodings.
using BiometricTemplate = BitString;

// Stable 256-bit identity string derived from a template.
struct Identity {
  std::array<std::uint8_t, 32> id_bytes{};

  bool operator==(const Identity&) const = default;
  std::string hex() const;
};

// Code and metric parameters of the extractor. The repetition code has
// codewords constant on each block of `block_bits` bits; majority decoding
// corrects every error pattern of total weight <= tolerance because
// 2 * tolerance < block_bits means no single block's majority can flip.
struct FuzzyParams {
  std::uint32_t template_bits = 256;  // k
  std::uint32_t tolerance = 96;       // t
  std::uint32_t block_bits = 256;

  void validate() const;  // throws std::invalid_argument when inconsistent
};

// Public helper data published next to a user record: the offset between
// the template and its nearest codeword, plus the code parameters.
struct SketchPar {
  BitString offset;
  std::uint32_t tolerance = 0;
  std::uint32_t block_bits = 0;

  bool operator==(const SketchPar&) const = default;
};

struct GenResult {
  Identity id;
  SketchPar par;
};

// Code-offset secure sketch over the Hamming metric. gen() hashes the
// codeword nearest the template; rep() recovers the same identity from any
// template within Hamming distance `tolerance` of the enrolled one. Both
// are deterministic.
class FuzzyExtractor {
 public:
  explicit FuzzyExtractor(FuzzyParams params);

  GenResult gen(const BiometricTemplate& b) const;
  Identity rep(const BiometricTemplate& b_prime, const SketchPar& par) const;

  const FuzzyParams& params() const { return params_; }

  // Per-block majority vote; exact nearest-codeword decoding for the
  // repetition code. Exposed for the oracle tests.
  BitString nearest_codeword(const BitString& b) const;

 private:
  FuzzyParams params_;
};

Identity identity_from_codeword(const BitString& codeword);

}  // namespace bioibe
