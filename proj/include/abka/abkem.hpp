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
//
// Ciphertext-policy attribute-based key encapsulation. Written
// multiplicatively over a pairing suite (G1, G2, GT, e):
//
//   setup:   a, b <- Zp*;  msk = g1^a;  mpk = (g1^b, e(g1,g2)^a)
//   keygen:  r <- Zp*;  x1 = msk * mpk1^r;  x2 = g2^r;
//            sk_i = H(attr_i)^r for each attribute
//   encap:   for span program (M, rho) with n rows, m cols:
//            u = (s, v2..vm);  mu = M u;  z = g2^s;  K = mpk2^s;
//            c_i = (mpk1^mu_i * H(rho(i))^-r_i,  g2^r_i)
//   decap:   find d with sum_{i in I} d_i M_i = (1,0,..,0);
//            w = prod c_i1^d_i;
//            K = e(x1, z) / (e(w, x2) * prod e(sk_{rho(i)}, c_i2^d_i))
//
// The encapsulator keeps s: this variant hands (K, C, s) back to the
// caller so a server can later verify knowledge of K via s alone.
// Encapsulation randomness is derived deterministically from a 32-byte
// seed, which makes the whole operation replayable in tests.

#ifndef ABKA_ABKEM_HPP
#define ABKA_ABKEM_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abka/bytes.hpp"
#include "abka/errors.hpp"
#include "abka/hash.hpp"
#include "abka/policy.hpp"
#include "abka/rng.hpp"
#include "abka/suite.hpp"

namespace abka {

struct SystemParams {
  std::shared_ptr<Suite> suite;
  unsigned security_k = 0;
};

inline SystemParams make_params(std::shared_ptr<Suite> suite) {
  SystemParams p;
  p.security_k = suite->security_level();
  p.suite = std::move(suite);
  return p;
}

struct MasterPublicKey {
  GroupElement mpk1;  // g1^b
  GroupElement mpk2;  // e(g1, g2)^a
};

struct MasterSecretKey {
  GroupElement msk;  // g1^a
};

struct MasterKeyPair {
  MasterPublicKey mpk;
  MasterSecretKey msk;
};

// Per-attribute components are stored in the sorted order of `attrs`.
struct AttributeSecretKey {
  AttributeSet attrs;
  GroupElement x1;  // g1^(a + b r)
  GroupElement x2;  // g2^r
  std::vector<GroupElement> sk;
};

struct Encapsulation {
  GroupElement z;  // g2^s
  std::vector<std::pair<GroupElement, GroupElement>> c;  // (c_i1, c_i2)
};

struct EncapSeed {
  std::array<std::uint8_t, 32> bytes{};
};

inline EncapSeed random_seed(Rng& rng) {
  EncapSeed seed;
  rng.fill(seed.bytes);
  return seed;
}

// The scalars consumed by one encapsulation: the secret s, the masking
// vector (v2..vm), and one blinding exponent per span-program row.
struct EncapRandomness {
  Scalar s;
  std::vector<Scalar> v;  // m - 1 entries
  std::vector<Scalar> r;  // n entries
};

struct EncapResult {
  GroupElement key;  // K in GT
  Encapsulation encap;
  Scalar s;
};

inline GroupElement hash_attribute(const Suite& suite,
                                   const std::string& name) {
  return suite.hash_to_g1(as_bytes(name));
}

inline MasterKeyPair setup(const SystemParams& params, Rng& rng) {
  const Suite& suite = *params.suite;
  if (params.security_k != suite.security_level()) {
    throw UsageError("security parameter does not match suite");
  }
  Scalar a = rng.uniform_nonzero_scalar(suite.order());
  Scalar b = rng.uniform_nonzero_scalar(suite.order());
  GroupElement g1 = suite.generator(GroupTag::g1);
  GroupElement g2 = suite.generator(GroupTag::g2);
  MasterKeyPair kp;
  kp.msk.msk = suite.exp(g1, a);
  kp.mpk.mpk1 = suite.exp(g1, b);
  kp.mpk.mpk2 = suite.exp(suite.pairing(g1, g2), a);
  wipe_scalar(a);
  wipe_scalar(b);
  return kp;
}

inline AttributeSecretKey keygen(const SystemParams& params,
                                 const MasterPublicKey& mpk,
                                 const MasterSecretKey& msk,
                                 const AttributeSet& attrs, Rng& rng) {
  const Suite& suite = *params.suite;
  if (attrs.empty()) throw UsageError("attribute set must be non-empty");
  Scalar r = rng.uniform_nonzero_scalar(suite.order());
  AttributeSecretKey key;
  key.attrs = attrs;
  key.x1 = suite.mul(msk.msk, suite.exp(mpk.mpk1, r));
  key.x2 = suite.exp(suite.generator(GroupTag::g2), r);
  key.sk.reserve(attrs.size());
  for (const std::string& name : attrs.names()) {
    key.sk.push_back(suite.exp(hash_attribute(suite, name), r));
  }
  wipe_scalar(r);
  return key;
}

namespace detail {

// One scalar of the seed-keyed generator: HMAC(seed, label || 0x00 ||
// counter) until the masked candidate lands below the modulus.
inline Scalar drbg_scalar(const EncapSeed& seed, const std::string& label,
                          const mpz_class& modulus) {
  const std::size_t len = byte_length(modulus);
  if (len == 0 || len > 32) {
    throw UsageError("group order too wide for seed expansion");
  }
  const std::size_t bits = mpz_sizeinbase(modulus.get_mpz_t(), 2);
  const std::uint8_t mask =
      static_cast<std::uint8_t>(0xff >> (len * 8 - bits));
  const ByteSpan key(seed.bytes.data(), seed.bytes.size());
  for (std::uint32_t ctr = 0;; ++ctr) {
    Bytes msg;
    append(msg, as_bytes(label));
    append_u8(msg, 0x00);
    append_u32(msg, ctr);
    Digest32 digest = hmac_sha256(key, msg);
    Bytes cand(digest.begin(), digest.begin() + static_cast<long>(len));
    cand[0] &= mask;
    mpz_class value = mpz_from_be(cand);
    secure_wipe(cand);
    secure_wipe(digest);
    if (value < modulus) return Scalar(std::move(value));
    wipe_mpz(value);
  }
}

}  // namespace detail

inline EncapRandomness derive_encap_randomness(const SystemParams& params,
                                               const EncapSeed& seed,
                                               std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw UsageError("span program must be non-trivial");
  const mpz_class& order = params.suite->order();
  EncapRandomness out;
  out.s = detail::drbg_scalar(seed, "s", order);
  out.v.reserve(m - 1);
  for (std::size_t j = 2; j <= m; ++j) {
    out.v.push_back(detail::drbg_scalar(seed, "v" + std::to_string(j), order));
  }
  out.r.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out.r.push_back(detail::drbg_scalar(seed, "r" + std::to_string(i), order));
  }
  return out;
}

inline void wipe_encap_randomness(EncapRandomness& rand) {
  wipe_scalar(rand.s);
  for (Scalar& v : rand.v) wipe_scalar(v);
  for (Scalar& r : rand.r) wipe_scalar(r);
}

inline EncapResult key_encap_star_with_randomness(const SystemParams& params,
                                                  const MasterPublicKey& mpk,
                                                  const MspProgram& msp,
                                                  const EncapRandomness& rand) {
  const Suite& suite = *params.suite;
  if (!msp.well_formed()) throw UsageError("malformed span program");
  if (rand.v.size() + 1 != msp.cols || rand.r.size() != msp.rows) {
    throw UsageError("randomness shape does not match span program");
  }
  const mpz_class& p = suite.order();
  GroupElement g2 = suite.generator(GroupTag::g2);

  EncapResult result;
  result.s = rand.s;
  result.key = suite.exp(mpk.mpk2, rand.s);
  result.encap.z = suite.exp(g2, rand.s);
  result.encap.c.reserve(msp.rows);
  for (std::size_t i = 0; i < msp.rows; ++i) {
    // mu_i = <M_i, (s, v2..vm)> mod p
    mpz_class mu = mod(msp.at(i, 0) * rand.s.value, p);
    for (std::size_t j = 1; j < msp.cols; ++j) {
      mu = mod(mu + msp.at(i, j) * rand.v[j - 1].value, p);
    }
    Scalar mu_s(std::move(mu));
    GroupElement blind =
        suite.inverse(suite.exp(hash_attribute(suite, msp.labels[i]),
                                rand.r[i]));
    GroupElement c1 = suite.mul(suite.exp(mpk.mpk1, mu_s), blind);
    GroupElement c2 = suite.exp(g2, rand.r[i]);
    wipe_scalar(mu_s);
    result.encap.c.emplace_back(std::move(c1), std::move(c2));
  }
  return result;
}

inline EncapResult key_encap_star(const SystemParams& params,
                                  const MasterPublicKey& mpk,
                                  const MspProgram& msp,
                                  const EncapSeed& seed) {
  EncapRandomness rand =
      derive_encap_randomness(params, seed, msp.rows, msp.cols);
  EncapResult result = key_encap_star_with_randomness(params, mpk, msp, rand);
  wipe_encap_randomness(rand);
  return result;
}

// Recovers K when the key's attributes satisfy the span program;
// returns nullopt when they do not. Structural mismatches between the
// encapsulation and the program throw instead: failing closed on a
// malformed message must not look like an authorization decision.
inline std::optional<GroupElement> key_decap(const SystemParams& params,
                                             const AttributeSecretKey& key,
                                             const MspProgram& msp,
                                             const Encapsulation& encap) {
  const Suite& suite = *params.suite;
  if (!msp.well_formed()) throw UsageError("malformed span program");
  if (encap.c.size() != msp.rows) {
    throw UsageError("encapsulation does not match span program shape");
  }
  if (encap.z.tag() != GroupTag::g2) throw UsageError("z must be in G2");
  for (const auto& [c1, c2] : encap.c) {
    if (c1.tag() != GroupTag::g1 || c2.tag() != GroupTag::g2) {
      throw UsageError("encapsulation component in wrong group");
    }
  }

  std::optional<SatisfyingAssignment> plan =
      decode_msp(msp, key.attrs, suite.order());
  if (!plan) return std::nullopt;

  GroupElement w = suite.identity(GroupTag::g1);
  std::vector<std::pair<GroupElement, GroupElement>> terms;
  terms.reserve(plan->indices.size() + 2);
  for (std::size_t k = 0; k < plan->indices.size(); ++k) {
    const std::size_t i = plan->indices[k];
    const Scalar& d = plan->coefficients[k];
    w = suite.mul(w, suite.exp(encap.c[i].first, d));
    std::optional<std::size_t> pos = key.attrs.index_of(msp.labels[i]);
    if (!pos) return std::nullopt;  // unreachable: decode uses owned rows
    terms.emplace_back(suite.inverse(key.sk[*pos]),
                       suite.exp(encap.c[i].second, d));
  }
  terms.emplace_back(key.x1, encap.z);
  terms.emplace_back(suite.inverse(w), key.x2);
  return suite.pairing_product(terms);
}

// End-to-end self check: keygen against fresh randomness, one
// encap/decap round trip, compare. Exercises every algorithm above.
inline bool scheme_consistent(const SystemParams& params,
                              const MasterPublicKey& mpk,
                              const MasterSecretKey& msk,
                              const PolicyFormula& policy,
                              const AttributeSet& attrs, Rng& rng) {
  MspProgram msp = compile_msp(policy);
  AttributeSecretKey key = keygen(params, mpk, msk, attrs, rng);
  EncapResult enc = key_encap_star(params, mpk, msp, random_seed(rng));
  std::optional<GroupElement> dec = key_decap(params, key, msp, enc.encap);
  const bool should_succeed = satisfies(policy, attrs);
  if (!should_succeed) return !dec.has_value();
  return dec.has_value() && params.suite->equal(*dec, enc.key);
}

}  // namespace abka

#endif  // ABKA_ABKEM_HPP
