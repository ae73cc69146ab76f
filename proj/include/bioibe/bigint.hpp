#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bioibe {

using Int = boost::multiprecision::cpp_int;

// Number of bytes needed to store v (at least 1).
std::size_t byte_length(const Int& v);

// Big-endian encoding padded on the left to exactly `width` bytes.
// Throws std::invalid_argument if v needs more than `width` bytes or v < 0.
std::vector<std::uint8_t> int_to_be_bytes(const Int& v, std::size_t width);

Int be_bytes_to_int(const std::uint8_t* data, std::size_t len);

// Lowercase hex without prefix, zero-padded to 2*width chars.
std::string int_to_hex(const Int& v, std::size_t width);

// Accepts the output of int_to_hex (any even or odd length, no prefix).
Int hex_to_int(const std::string& hex);

}  // namespace bioibe
