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
// Field tower for BLS12-381:
//   Fp2  = Fp[u]  / (u^2 + 1)
//   Fp6  = Fp2[v] / (v^3 - xi),  xi = 1 + u
//   Fp12 = Fp6[w] / (w^2 - v)
// so w^6 = xi. Elements are kept reduced to [0, p) at all times.

#ifndef ABKA_DETAIL_BLS381_FIELD_HPP
#define ABKA_DETAIL_BLS381_FIELD_HPP

#include <optional>

#include <gmpxx.h>

#include "abka/errors.hpp"

namespace abka {
namespace bls381 {

inline const mpz_class& fp_prime() {
  static const mpz_class p(
      "0x1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f624"
      "1eabfffeb153ffffb9feffffffffaaab");
  return p;
}

// ---------------------------------------------------------------- Fp --

inline mpz_class fp_add(const mpz_class& a, const mpz_class& b) {
  mpz_class r = a + b;
  if (r >= fp_prime()) r -= fp_prime();
  return r;
}

inline mpz_class fp_sub(const mpz_class& a, const mpz_class& b) {
  mpz_class r = a - b;
  if (r < 0) r += fp_prime();
  return r;
}

inline mpz_class fp_mul(const mpz_class& a, const mpz_class& b) {
  mpz_class r = a * b;
  r %= fp_prime();
  return r;
}

inline mpz_class fp_sqr(const mpz_class& a) { return fp_mul(a, a); }

inline mpz_class fp_neg(const mpz_class& a) {
  if (a == 0) return 0;
  mpz_class r = fp_prime() - a;
  return r;
}

inline mpz_class fp_double(const mpz_class& a) { return fp_add(a, a); }

inline mpz_class fp_inv(const mpz_class& a) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), fp_prime().get_mpz_t()) == 0) {
    throw UsageError("inversion of zero in Fp");
  }
  return r;
}

inline mpz_class fp_pow(const mpz_class& a, const mpz_class& e) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(),
           fp_prime().get_mpz_t());
  return r;
}

// p = 3 (mod 4), so a^((p+1)/4) is a square root whenever one exists.
inline std::optional<mpz_class> fp_sqrt(const mpz_class& a) {
  static const mpz_class e = (fp_prime() + 1) / 4;
  mpz_class cand = fp_pow(a, e);
  if (fp_sqr(cand) != a) return std::nullopt;
  return cand;
}

// True iff y is the lexicographically larger of {y, p - y}.
inline bool fp_lex_largest(const mpz_class& y) { return y > fp_prime() - y; }

// --------------------------------------------------------------- Fp2 --

struct Fp2 {
  mpz_class c0, c1;  // c0 + c1*u
  bool operator==(const Fp2&) const = default;
};

inline Fp2 fp2_zero() { return {0, 0}; }
inline Fp2 fp2_one() { return {1, 0}; }
inline bool fp2_is_zero(const Fp2& a) { return a.c0 == 0 && a.c1 == 0; }

inline Fp2 fp2_add(const Fp2& a, const Fp2& b) {
  return {fp_add(a.c0, b.c0), fp_add(a.c1, b.c1)};
}

inline Fp2 fp2_sub(const Fp2& a, const Fp2& b) {
  return {fp_sub(a.c0, b.c0), fp_sub(a.c1, b.c1)};
}

inline Fp2 fp2_neg(const Fp2& a) { return {fp_neg(a.c0), fp_neg(a.c1)}; }

inline Fp2 fp2_conj(const Fp2& a) { return {a.c0, fp_neg(a.c1)}; }

inline Fp2 fp2_mul(const Fp2& a, const Fp2& b) {
  // Karatsuba over u^2 = -1.
  mpz_class t0 = fp_mul(a.c0, b.c0);
  mpz_class t1 = fp_mul(a.c1, b.c1);
  mpz_class t2 = fp_mul(fp_add(a.c0, a.c1), fp_add(b.c0, b.c1));
  return {fp_sub(t0, t1), fp_sub(fp_sub(t2, t0), t1)};
}

inline Fp2 fp2_sqr(const Fp2& a) {
  // (c0 + c1 u)^2 = (c0+c1)(c0-c1) + 2 c0 c1 u.
  mpz_class t0 = fp_mul(fp_add(a.c0, a.c1), fp_sub(a.c0, a.c1));
  mpz_class t1 = fp_double(fp_mul(a.c0, a.c1));
  return {t0, t1};
}

inline Fp2 fp2_mul_fp(const Fp2& a, const mpz_class& s) {
  return {fp_mul(a.c0, s), fp_mul(a.c1, s)};
}

// Multiply by xi = 1 + u.
inline Fp2 fp2_mul_xi(const Fp2& a) {
  return {fp_sub(a.c0, a.c1), fp_add(a.c0, a.c1)};
}

inline Fp2 fp2_inv(const Fp2& a) {
  // 1/(c0 + c1 u) = (c0 - c1 u) / (c0^2 + c1^2).
  mpz_class norm = fp_add(fp_sqr(a.c0), fp_sqr(a.c1));
  mpz_class ninv = fp_inv(norm);
  return {fp_mul(a.c0, ninv), fp_mul(fp_neg(a.c1), ninv)};
}

inline Fp2 fp2_pow(const Fp2& a, const mpz_class& e) {
  Fp2 r = fp2_one();
  for (mp_bitcnt_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
    r = fp2_sqr(r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp2_mul(r, a);
  }
  return r;
}

// Square root via the complex method; the candidate is verified, so a
// nullopt return is authoritative.
inline std::optional<Fp2> fp2_sqrt(const Fp2& a) {
  if (fp2_is_zero(a)) return fp2_zero();
  static const mpz_class half = fp_inv(mpz_class(2));
  std::optional<Fp2> result;
  if (a.c1 == 0) {
    if (auto s = fp_sqrt(a.c0)) {
      result = Fp2{*s, 0};
    } else if (auto t = fp_sqrt(fp_neg(a.c0))) {
      result = Fp2{0, *t};  // (t u)^2 = -t^2 = c0
    }
  } else {
    mpz_class norm = fp_add(fp_sqr(a.c0), fp_sqr(a.c1));
    std::optional<mpz_class> delta = fp_sqrt(norm);
    if (!delta) return std::nullopt;
    std::optional<mpz_class> x0 = fp_sqrt(fp_mul(fp_add(a.c0, *delta), half));
    if (!x0) x0 = fp_sqrt(fp_mul(fp_sub(a.c0, *delta), half));
    if (!x0 || *x0 == 0) return std::nullopt;
    mpz_class x1 = fp_mul(a.c1, fp_inv(fp_double(*x0)));
    result = Fp2{*x0, x1};
  }
  if (!result || !(fp2_sqr(*result) == a)) return std::nullopt;
  return result;
}

// Lexicographic order on (c1, c0); used for the compressed-point sign.
inline bool fp2_lex_largest(const Fp2& y) {
  Fp2 n = fp2_neg(y);
  if (y.c1 != n.c1) return y.c1 > n.c1;
  return y.c0 > n.c0;
}

// --------------------------------------------------------------- Fp6 --

struct Fp6 {
  Fp2 c0, c1, c2;  // c0 + c1*v + c2*v^2
  bool operator==(const Fp6&) const = default;
};

inline Fp6 fp6_zero() { return {fp2_zero(), fp2_zero(), fp2_zero()}; }
inline Fp6 fp6_one() { return {fp2_one(), fp2_zero(), fp2_zero()}; }
inline bool fp6_is_zero(const Fp6& a) {
  return fp2_is_zero(a.c0) && fp2_is_zero(a.c1) && fp2_is_zero(a.c2);
}

inline Fp6 fp6_add(const Fp6& a, const Fp6& b) {
  return {fp2_add(a.c0, b.c0), fp2_add(a.c1, b.c1), fp2_add(a.c2, b.c2)};
}

inline Fp6 fp6_sub(const Fp6& a, const Fp6& b) {
  return {fp2_sub(a.c0, b.c0), fp2_sub(a.c1, b.c1), fp2_sub(a.c2, b.c2)};
}

inline Fp6 fp6_neg(const Fp6& a) {
  return {fp2_neg(a.c0), fp2_neg(a.c1), fp2_neg(a.c2)};
}

inline Fp6 fp6_mul(const Fp6& a, const Fp6& b) {
  // Karatsuba-style interpolation, 6 Fp2 multiplications.
  Fp2 t0 = fp2_mul(a.c0, b.c0);
  Fp2 t1 = fp2_mul(a.c1, b.c1);
  Fp2 t2 = fp2_mul(a.c2, b.c2);
  Fp2 s12 = fp2_mul(fp2_add(a.c1, a.c2), fp2_add(b.c1, b.c2));
  Fp2 s01 = fp2_mul(fp2_add(a.c0, a.c1), fp2_add(b.c0, b.c1));
  Fp2 s02 = fp2_mul(fp2_add(a.c0, a.c2), fp2_add(b.c0, b.c2));
  Fp2 c0 = fp2_add(t0, fp2_mul_xi(fp2_sub(fp2_sub(s12, t1), t2)));
  Fp2 c1 = fp2_add(fp2_sub(fp2_sub(s01, t0), t1), fp2_mul_xi(t2));
  Fp2 c2 = fp2_add(fp2_sub(fp2_sub(s02, t0), t2), t1);
  return {c0, c1, c2};
}

inline Fp6 fp6_sqr(const Fp6& a) { return fp6_mul(a, a); }

// Multiply by v: (c0, c1, c2) -> (xi*c2, c0, c1).
inline Fp6 fp6_mul_by_v(const Fp6& a) {
  return {fp2_mul_xi(a.c2), a.c0, a.c1};
}

inline Fp6 fp6_mul_fp2(const Fp6& a, const Fp2& s) {
  return {fp2_mul(a.c0, s), fp2_mul(a.c1, s), fp2_mul(a.c2, s)};
}

inline Fp6 fp6_inv(const Fp6& a) {
  Fp2 c0 = fp2_sub(fp2_sqr(a.c0), fp2_mul_xi(fp2_mul(a.c1, a.c2)));
  Fp2 c1 = fp2_sub(fp2_mul_xi(fp2_sqr(a.c2)), fp2_mul(a.c0, a.c1));
  Fp2 c2 = fp2_sub(fp2_sqr(a.c1), fp2_mul(a.c0, a.c2));
  Fp2 t = fp2_add(fp2_mul(a.c0, c0),
                  fp2_mul_xi(fp2_add(fp2_mul(a.c1, c2), fp2_mul(a.c2, c1))));
  Fp2 tinv = fp2_inv(t);
  return {fp2_mul(c0, tinv), fp2_mul(c1, tinv), fp2_mul(c2, tinv)};
}

// -------------------------------------------------------------- Fp12 --

struct Fp12 {
  Fp6 c0, c1;  // c0 + c1*w
  bool operator==(const Fp12&) const = default;
};

inline Fp12 fp12_zero() { return {fp6_zero(), fp6_zero()}; }
inline Fp12 fp12_one() { return {fp6_one(), fp6_zero()}; }
inline bool fp12_is_one(const Fp12& a) { return a == fp12_one(); }

inline Fp12 fp12_add(const Fp12& a, const Fp12& b) {
  return {fp6_add(a.c0, b.c0), fp6_add(a.c1, b.c1)};
}

inline Fp12 fp12_sub(const Fp12& a, const Fp12& b) {
  return {fp6_sub(a.c0, b.c0), fp6_sub(a.c1, b.c1)};
}

inline Fp12 fp12_neg(const Fp12& a) { return {fp6_neg(a.c0), fp6_neg(a.c1)}; }

inline Fp12 fp12_mul(const Fp12& a, const Fp12& b) {
  Fp6 t0 = fp6_mul(a.c0, b.c0);
  Fp6 t1 = fp6_mul(a.c1, b.c1);
  Fp6 s = fp6_mul(fp6_add(a.c0, a.c1), fp6_add(b.c0, b.c1));
  return {fp6_add(t0, fp6_mul_by_v(t1)), fp6_sub(fp6_sub(s, t0), t1)};
}

inline Fp12 fp12_sqr(const Fp12& a) {
  // Complex squaring over w^2 = v.
  Fp6 t = fp6_mul(a.c0, a.c1);
  Fp6 s = fp6_mul(fp6_add(a.c0, a.c1), fp6_add(a.c0, fp6_mul_by_v(a.c1)));
  Fp6 c0 = fp6_sub(fp6_sub(s, t), fp6_mul_by_v(t));
  Fp6 c1 = fp6_add(t, t);
  return {c0, c1};
}

// Conjugation over Fp6, i.e. the p^6 Frobenius.
inline Fp12 fp12_conj(const Fp12& a) { return {a.c0, fp6_neg(a.c1)}; }

inline Fp12 fp12_inv(const Fp12& a) {
  Fp6 norm = fp6_sub(fp6_sqr(a.c0), fp6_mul_by_v(fp6_sqr(a.c1)));
  Fp6 ninv = fp6_inv(norm);
  return {fp6_mul(a.c0, ninv), fp6_neg(fp6_mul(a.c1, ninv))};
}

// Variable-time exponentiation; for public exponents only.
inline Fp12 fp12_pow(const Fp12& a, const mpz_class& e) {
  if (e == 0) return fp12_one();
  Fp12 r = fp12_one();
  for (mp_bitcnt_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
    r = fp12_sqr(r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp12_mul(r, a);
  }
  return r;
}

// Montgomery-style ladder with a fixed iteration count, for secret
// exponents. Every step performs one multiplication and one squaring
// regardless of the bit value.
inline Fp12 fp12_pow_ladder(const Fp12& a, const mpz_class& e,
                            std::size_t bits) {
  Fp12 r0 = fp12_one();
  Fp12 r1 = a;
  for (std::size_t i = bits; i-- > 0;) {
    if (mpz_tstbit(e.get_mpz_t(), i) == 0) {
      r1 = fp12_mul(r0, r1);
      r0 = fp12_sqr(r0);
    } else {
      r0 = fp12_mul(r0, r1);
      r1 = fp12_sqr(r1);
    }
  }
  return r0;
}

}  // namespace bls381
}  // namespace abka

#endif  // ABKA_DETAIL_BLS381_FIELD_HPP
