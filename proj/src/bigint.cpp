#include "bioibe/bigint.hpp"

#include <stdexcept>

namespace bioibe {

std::size_t byte_length(const Int& v) {
  if (v == 0) return 1;
  return (boost::multiprecision::msb(v) / 8) + 1;
}

std::vector<std::uint8_t> int_to_be_bytes(const Int& v, std::size_t width) {
  if (v < 0) throw std::invalid_argument("int_to_be_bytes: negative value");
  if (byte_length(v) > width && v != 0)
    throw std::invalid_argument("int_to_be_bytes: value does not fit in width");
  std::vector<std::uint8_t> out(width, 0);
  Int x = v;
  for (std::size_t i = 0; i < width && x != 0; ++i) {
    out[width - 1 - i] = static_cast<std::uint8_t>(x & 0xff);
    x >>= 8;
  }
  return out;
}

Int be_bytes_to_int(const std::uint8_t* data, std::size_t len) {
  Int x = 0;
  for (std::size_t i = 0; i < len; ++i) {
    x <<= 8;
    x += data[i];
  }
  return x;
}

std::string int_to_hex(const Int& v, std::size_t width) {
  static const char* digits = "0123456789abcdef";
  auto bytes = int_to_be_bytes(v, width);
  std::string out;
  out.reserve(2 * width);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

static int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument("hex_to_int: invalid hex digit");
}

Int hex_to_int(const std::string& hex) {
  if (hex.empty()) throw std::invalid_argument("hex_to_int: empty string");
  Int x = 0;
  for (char c : hex) {
    x <<= 4;
    x += hex_nibble(c);
  }
  return x;
}

}  // namespace bioibe
