// Copyright 2026 The abka Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ABKA_HASH_HPP
#define ABKA_HASH_HPP

#include <array>
#include <cstdint>
#include <stdexcept>

#include <openssl/evp.h>

#include "abka/bytes.hpp"

namespace abka {

using Digest32 = std::array<std::uint8_t, 32>;

namespace detail {

class Sha256Ctx {
 public:
  Sha256Ctx() : ctx_(EVP_MD_CTX_new()) {
    if (ctx_ == nullptr ||
        EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1) {
      throw std::runtime_error("sha256 init failed");
    }
  }
  ~Sha256Ctx() { EVP_MD_CTX_free(ctx_); }
  Sha256Ctx(const Sha256Ctx&) = delete;
  Sha256Ctx& operator=(const Sha256Ctx&) = delete;

  void update(ByteSpan data) {
    if (EVP_DigestUpdate(ctx_, data.data(), data.size()) != 1) {
      throw std::runtime_error("sha256 update failed");
    }
  }

  Digest32 final() {
    Digest32 out{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_, out.data(), &len) != 1 || len != 32) {
      throw std::runtime_error("sha256 final failed");
    }
    return out;
  }

 private:
  EVP_MD_CTX* ctx_;
};

}  // namespace detail

inline Digest32 sha256(ByteSpan data) {
  detail::Sha256Ctx c;
  c.update(data);
  return c.final();
}

// RFC 2104 HMAC over SHA-256 (block size 64).
inline Digest32 hmac_sha256(ByteSpan key, ByteSpan msg) {
  std::array<std::uint8_t, 64> block{};
  if (key.size() > block.size()) {
    Digest32 kd = sha256(key);
    std::memcpy(block.data(), kd.data(), kd.size());
  } else {
    std::memcpy(block.data(), key.data(), key.size());
  }

  std::array<std::uint8_t, 64> ipad{};
  std::array<std::uint8_t, 64> opad{};
  for (std::size_t i = 0; i < 64; ++i) {
    ipad[i] = block[i] ^ 0x36;
    opad[i] = block[i] ^ 0x5c;
  }

  detail::Sha256Ctx inner;
  inner.update(ipad);
  inner.update(msg);
  Digest32 inner_digest = inner.final();

  detail::Sha256Ctx outer;
  outer.update(opad);
  outer.update(inner_digest);
  Digest32 out = outer.final();

  secure_wipe(block.data(), block.size());
  secure_wipe(ipad.data(), ipad.size());
  secure_wipe(opad.data(), opad.size());
  return out;
}

}  // namespace abka

#endif  // ABKA_HASH_HPP
