#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bioibe {

// Honest decryption refuses ciphertexts whose attribute overlap with the
// key is below the threshold.
class InsufficientOverlap : public std::runtime_error {
 public:
  InsufficientOverlap(std::size_t overlap, std::size_t required)
      : std::runtime_error("insufficient attribute overlap: have " +
                           std::to_string(overlap) + ", need " +
                           std::to_string(required)),
        overlap_(overlap),
        required_(required) {}

  std::size_t overlap() const { return overlap_; }
  std::size_t required() const { return required_; }

 private:
  std::size_t overlap_;
  std::size_t required_;
};

// A key with fewer shares than the threshold cannot interpolate anything.
class InsufficientShares : public std::runtime_error {
 public:
  InsufficientShares(std::size_t shares, std::size_t required)
      : std::runtime_error("key holds " + std::to_string(shares) +
                           " shares, interpolation needs " +
                           std::to_string(required)) {}
};

}  // namespace bioibe
