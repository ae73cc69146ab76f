#include "bioibe/fuzzy_extractor.hpp"

#include <stdexcept>

#include "bioibe/hashing.hpp"

namespace bioibe {

std::string Identity::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (auto b : id_bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

void FuzzyParams::validate() const {
  if (template_bits == 0)
    throw std::invalid_argument("FuzzyParams: template_bits must be positive");
  if (block_bits == 0 || template_bits % block_bits != 0)
    throw std::invalid_argument("FuzzyParams: block_bits must divide template_bits");
  if (2u * tolerance >= block_bits)
    throw std::invalid_argument("FuzzyParams: need 2 * tolerance < block_bits");
  if (tolerance >= template_bits)
    throw std::invalid_argument("FuzzyParams: tolerance must be below template_bits");
}

FuzzyExtractor::FuzzyExtractor(FuzzyParams params) : params_(params) {
  params_.validate();
}

BitString FuzzyExtractor::nearest_codeword(const BitString& b) const {
  const std::size_t k = params_.template_bits;
  const std::size_t block = params_.block_bits;
  BitString out(k);
  for (std::size_t start = 0; start < k; start += block) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < block; ++i) ones += b.get(start + i);
    if (2 * ones > block)  // tie decodes to zero
      for (std::size_t i = 0; i < block; ++i) out.set(start + i, true);
  }
  return out;
}

Identity identity_from_codeword(const BitString& codeword) {
  Identity id;
  id.id_bytes = sha256(codeword.bytes());
  return id;
}

GenResult FuzzyExtractor::gen(const BiometricTemplate& b) const {
  if (b.size() != params_.template_bits)
    throw std::invalid_argument("gen: template length mismatch");
  BitString codeword = nearest_codeword(b);
  GenResult out{identity_from_codeword(codeword),
                SketchPar{b ^ codeword, params_.tolerance, params_.block_bits}};
  return out;
}

Identity FuzzyExtractor::rep(const BiometricTemplate& b_prime,
                             const SketchPar& par) const {
  if (b_prime.size() != params_.template_bits)
    throw std::invalid_argument("rep: template length mismatch");
  if (par.offset.size() != params_.template_bits)
    throw std::invalid_argument("rep: sketch length mismatch");
  if (par.block_bits != params_.block_bits)
    throw std::invalid_argument("rep: sketch block width mismatch");
  // b' ^ offset = codeword ^ (b ^ b'); majority decoding strips the error
  // term whenever dis(b, b') <= tolerance.
  BitString codeword = nearest_codeword(b_prime ^ par.offset);
  return identity_from_codeword(codeword);
}

}  // namespace bioibe
