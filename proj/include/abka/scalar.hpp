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

#ifndef ABKA_SCALAR_HPP
#define ABKA_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "abka/bytes.hpp"
#include "abka/errors.hpp"

namespace abka {

// Residue modulo a suite's group order. The wrapped value is kept in
// [0, order) by every operation that produces one.
struct Scalar {
  mpz_class value;

  Scalar() : value(0) {}
  explicit Scalar(unsigned long v) : value(v) {}
  explicit Scalar(const mpz_class& v) : value(v) {}
  explicit Scalar(const std::string& decimal) : value(decimal) {}

  bool operator==(const Scalar& other) const { return value == other.value; }
  bool is_zero() const { return value == 0; }
};

inline mpz_class mpz_from_be(ByteSpan bytes) {
  mpz_class v;
  if (!bytes.empty()) {
    mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return v;
}

// Number of bytes needed for values in [0, modulus).
inline std::size_t byte_length(const mpz_class& modulus) {
  return (mpz_sizeinbase(modulus.get_mpz_t(), 2) + 7) / 8;
}

// Fixed-width big-endian encoding; `v` must already fit in `width` bytes.
inline void mpz_to_be(const mpz_class& v, std::uint8_t* out, std::size_t width) {
  std::memset(out, 0, width);
  if (v == 0) return;
  std::size_t count = 0;
  const std::size_t need = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
  if (need > width) throw UsageError("integer too wide for encoding");
  mpz_export(out + (width - need), &count, 1, 1, 1, 0, v.get_mpz_t());
}

inline Bytes mpz_to_be(const mpz_class& v, std::size_t width) {
  Bytes out(width);
  mpz_to_be(v, out.data(), width);
  return out;
}

inline mpz_class mod(const mpz_class& v, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Overwrites the limbs backing the value before releasing them.
inline void wipe_mpz(mpz_class& v) {
  const std::size_t n = mpz_size(v.get_mpz_t());
  if (n > 0) {
    mp_limb_t* limbs = mpz_limbs_modify(v.get_mpz_t(), n);
    secure_wipe(limbs, n * sizeof(mp_limb_t));
    mpz_limbs_finish(v.get_mpz_t(), 0);
  }
  v = 0;
}

inline void wipe_scalar(Scalar& s) { wipe_mpz(s.value); }

}  // namespace abka

#endif  // ABKA_SCALAR_HPP
