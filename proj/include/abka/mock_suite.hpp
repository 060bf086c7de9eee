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

#ifndef ABKA_MOCK_SUITE_HPP
#define ABKA_MOCK_SUITE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "abka/bytes.hpp"
#include "abka/errors.hpp"
#include "abka/hash.hpp"
#include "abka/suite.hpp"

namespace abka {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                                std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return acc;
}

// Deterministic Miller-Rabin; the listed bases decide primality for all
// 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace detail

// Toy pairing suite for tests and demos: every group is Z_p under
// addition of exponents, an element stores its own discrete log, and
// the pairing multiplies exponents mod p. Offers no security whatsoever
// (the "discrete log" is sitting right there) but satisfies every
// algebraic identity of a real pairing, which makes scheme-level logic
// checkable against hand computation.
class MockSuite final : public Suite {
 public:
  static constexpr std::uint8_t kSuiteId = 0x00;
  static constexpr std::uint64_t kDefaultPrime = (1ull << 61) - 1;

  explicit MockSuite(std::uint64_t prime = kDefaultPrime) : p_(prime) {
    if (prime < 5 || prime >= (1ull << 61)) {
      throw UsageError("mock suite prime must be in [5, 2^61)");
    }
    if (!detail::is_prime_u64(prime)) {
      throw UsageError("mock suite modulus is not prime");
    }
    order_ = mpz_class();
    mpz_import(order_.get_mpz_t(), 1, 1, sizeof(prime), 0, 0, &prime);
  }

  std::uint8_t id() const override { return kSuiteId; }
  std::string name() const override { return "mock"; }
  unsigned security_level() const override { return 0; }
  const mpz_class& order() const override { return order_; }
  std::size_t element_size(GroupTag) const override { return 8; }

  GroupElement generator(GroupTag tag) const override {
    return from_exponent(tag, 1);
  }
  GroupElement identity(GroupTag tag) const override {
    return from_exponent(tag, 0);
  }
  bool is_identity(const GroupElement& e) const override {
    return exponent_of(e) == 0;
  }
  bool equal(const GroupElement& a, const GroupElement& b) const override {
    return a.tag() == b.tag() && exponent_of(a) == exponent_of(b);
  }

  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    if (a.tag() != b.tag()) throw UsageError("group mismatch in mul");
    std::uint64_t ea = exponent_of(a);
    std::uint64_t eb = exponent_of(b);
    std::uint64_t sum = ea + eb;  // p < 2^61, no overflow
    if (sum >= p_) sum -= p_;
    return from_exponent(a.tag(), sum);
  }

  GroupElement inverse(const GroupElement& e) const override {
    std::uint64_t x = exponent_of(e);
    return from_exponent(e.tag(), x == 0 ? 0 : p_ - x);
  }

  GroupElement exp(const GroupElement& base, const Scalar& k) const override {
    return from_exponent(base.tag(),
                         detail::mulmod_u64(exponent_of(base), reduce(k), p_));
  }

  GroupElement pairing(const GroupElement& a,
                       const GroupElement& b) const override {
    if (a.tag() != GroupTag::g1 || b.tag() != GroupTag::g2) {
      throw UsageError("pairing expects (G1, G2)");
    }
    return from_exponent(GroupTag::gt,
                         detail::mulmod_u64(exponent_of(a), exponent_of(b), p_));
  }

  GroupElement hash_to_g1(ByteSpan data) const override {
    Digest32 h = sha256(data);
    std::uint64_t x = 0;
    for (std::uint8_t byte : h) {
      x = detail::mulmod_u64(x, 256, p_) + byte;
      if (x >= p_) x -= p_;
    }
    return from_exponent(GroupTag::g1, x);
  }

  Bytes encode(const GroupElement& e) const override {
    Bytes out;
    append_u64(out, exponent_of(e));
    return out;
  }

  GroupElement decode(GroupTag tag, ByteSpan data) const override {
    if (data.size() != 8) throw WireError("mock element must be 8 bytes");
    std::uint64_t x = read_u64_be(data);
    if (x >= p_) throw WireError("mock element exponent out of range");
    return from_exponent(tag, x);
  }

  // Trapdoor accessors. Tests use these to compare elements against
  // hand-computed exponents; nothing in the scheme itself may.
  std::uint64_t exponent_of(const GroupElement& e) const {
    return detail::rep_as<std::uint64_t>(e, kSuiteId);
  }

  GroupElement from_exponent(GroupTag tag, std::uint64_t x) const {
    if (x >= p_) x %= p_;
    return detail::make_element<std::uint64_t>(tag, kSuiteId, x);
  }

  std::uint64_t prime_u64() const { return p_; }

 private:
  std::uint64_t reduce(const Scalar& k) const {
    mpz_class r = mod(k.value, order_);
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
  }

  std::uint64_t p_;
  mpz_class order_;
};

}  // namespace abka

#endif  // ABKA_MOCK_SUITE_HPP
