#include "bioibe/hashing.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <memory>
#include <stdexcept>

namespace bioibe {

namespace {

struct CtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};
using CtxPtr = std::unique_ptr<EVP_MD_CTX, CtxDeleter>;

std::vector<std::uint8_t> evp_digest(const EVP_MD* md,
                                     std::span<const std::uint8_t> data) {
  CtxPtr ctx(EVP_MD_CTX_new());
  if (!ctx) throw std::runtime_error("EVP_MD_CTX_new failed");
  unsigned int out_len = 0;
  std::vector<std::uint8_t> out(EVP_MD_get_size(md));
  if (EVP_DigestInit_ex(ctx.get(), md, nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), out.data(), &out_len) != 1)
    throw std::runtime_error("EVP digest computation failed");
  out.resize(out_len);
  return out;
}

}  // namespace

Digest sha256(std::span<const std::uint8_t> data) {
  auto raw = evp_digest(EVP_sha256(), data);
  Digest d{};
  std::memcpy(d.data(), raw.data(), d.size());
  return d;
}

Digest hmac_sha256(std::span<const std::uint8_t> key,
                   std::span<const std::uint8_t> data) {
  constexpr std::size_t kBlock = 64;
  std::array<std::uint8_t, kBlock> k{};
  if (key.size() > kBlock) {
    Digest kd = sha256(key);
    std::memcpy(k.data(), kd.data(), kd.size());
  } else {
    std::memcpy(k.data(), key.data(), key.size());
  }
  std::vector<std::uint8_t> inner(kBlock + data.size());
  for (std::size_t i = 0; i < kBlock; ++i) inner[i] = k[i] ^ 0x36;
  std::memcpy(inner.data() + kBlock, data.data(), data.size());
  Digest inner_hash = sha256(inner);

  std::vector<std::uint8_t> outer(kBlock + inner_hash.size());
  for (std::size_t i = 0; i < kBlock; ++i) outer[i] = k[i] ^ 0x5c;
  std::memcpy(outer.data() + kBlock, inner_hash.data(), inner_hash.size());
  return sha256(outer);
}

Scalar hash_to_nonzero_scalar(std::span<const std::uint8_t> data, const Int& p,
                              std::string_view domain) {
  for (std::uint32_t counter = 0;; ++counter) {
    std::vector<std::uint8_t> msg;
    msg.reserve(domain.size() + 5 + data.size());
    msg.insert(msg.end(), domain.begin(), domain.end());
    msg.push_back(0x00);  // separates domain from counter/data
    msg.push_back(static_cast<std::uint8_t>(counter >> 24));
    msg.push_back(static_cast<std::uint8_t>(counter >> 16));
    msg.push_back(static_cast<std::uint8_t>(counter >> 8));
    msg.push_back(static_cast<std::uint8_t>(counter));
    msg.insert(msg.end(), data.begin(), data.end());

    auto wide = evp_digest(EVP_sha512(), msg);
    Int v = be_bytes_to_int(wide.data(), wide.size()) % p;
    if (v != 0) return Scalar(v, p);
  }
}

}  // namespace bioibe
