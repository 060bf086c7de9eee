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
// BLS12-381 curve arithmetic and the ate pairing.
//   E  : y^2 = x^3 + 4        over Fp   (G1)
//   E' : y^2 = x^3 + 4(1+u)   over Fp2  (G2, M-type twist)
// G2 points untwist into E(Fp12) via (x, y) -> (x*w^-2, y*w^-3); the
// Miller loop then runs with textbook affine formulas over Fp12, which
// trades speed for being auditable against the definition. Point
// serialization follows the widespread 48/96-byte compressed format
// with flag bits in the top byte.

#ifndef ABKA_DETAIL_BLS381_CURVE_HPP
#define ABKA_DETAIL_BLS381_CURVE_HPP

#include <array>
#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "abka/bytes.hpp"
#include "abka/detail/bls381_field.hpp"
#include "abka/errors.hpp"
#include "abka/hash.hpp"
#include "abka/scalar.hpp"

namespace abka {
namespace bls381 {

struct G1Affine {
  mpz_class x, y;
  bool infinity = true;
  bool operator==(const G1Affine&) const = default;
};

struct G2Affine {
  Fp2 x, y;
  bool infinity = true;
  bool operator==(const G2Affine&) const = default;
};

// Field-op traits so Jacobian arithmetic is shared between G1 and G2.
struct FpOps {
  using E = mpz_class;
  static E zero() { return 0; }
  static E one() { return 1; }
  static bool is_zero(const E& a) { return a == 0; }
  static E add(const E& a, const E& b) { return fp_add(a, b); }
  static E sub(const E& a, const E& b) { return fp_sub(a, b); }
  static E mul(const E& a, const E& b) { return fp_mul(a, b); }
  static E sqr(const E& a) { return fp_sqr(a); }
  static E neg(const E& a) { return fp_neg(a); }
  static E inv(const E& a) { return fp_inv(a); }
};

struct Fp2Ops {
  using E = Fp2;
  static E zero() { return fp2_zero(); }
  static E one() { return fp2_one(); }
  static bool is_zero(const E& a) { return fp2_is_zero(a); }
  static E add(const E& a, const E& b) { return fp2_add(a, b); }
  static E sub(const E& a, const E& b) { return fp2_sub(a, b); }
  static E mul(const E& a, const E& b) { return fp2_mul(a, b); }
  static E sqr(const E& a) { return fp2_sqr(a); }
  static E neg(const E& a) { return fp2_neg(a); }
  static E inv(const E& a) { return fp2_inv(a); }
};

// Short-Weierstrass arithmetic with a = 0, Jacobian coordinates
// (x = X/Z^2, y = Y/Z^3, infinity encoded as Z = 0).
template <typename Ops>
struct CurveOps {
  using E = typename Ops::E;

  struct Jac {
    E x, y, z;
  };

  static Jac infinity() { return {Ops::one(), Ops::one(), Ops::zero()}; }
  static bool is_infinity(const Jac& p) { return Ops::is_zero(p.z); }

  static Jac from_affine(const E& x, const E& y) {
    return {x, y, Ops::one()};
  }

  static void to_affine(const Jac& p, E& x, E& y, bool& inf) {
    if (is_infinity(p)) {
      x = Ops::zero();
      y = Ops::zero();
      inf = true;
      return;
    }
    E zi = Ops::inv(p.z);
    E zi2 = Ops::sqr(zi);
    x = Ops::mul(p.x, zi2);
    y = Ops::mul(p.y, Ops::mul(zi2, zi));
    inf = false;
  }

  static Jac dbl(const Jac& p) {
    if (is_infinity(p) || Ops::is_zero(p.y)) return infinity();
    E a = Ops::sqr(p.x);
    E b = Ops::sqr(p.y);
    E c = Ops::sqr(b);
    E t = Ops::sqr(Ops::add(p.x, b));
    E d = Ops::add(Ops::sub(Ops::sub(t, a), c), Ops::sub(t, Ops::add(a, c)));
    // d = 2((x+b)^2 - a - c)
    E e = Ops::add(Ops::add(a, a), a);
    E f = Ops::sqr(e);
    E x3 = Ops::sub(f, Ops::add(d, d));
    E c8 = Ops::add(Ops::add(c, c), Ops::add(c, c));
    c8 = Ops::add(c8, c8);
    E y3 = Ops::sub(Ops::mul(e, Ops::sub(d, x3)), c8);
    E z3 = Ops::mul(Ops::add(p.y, p.y), p.z);
    return {x3, y3, z3};
  }

  static Jac add(const Jac& p, const Jac& q) {
    if (is_infinity(p)) return q;
    if (is_infinity(q)) return p;
    E z1z1 = Ops::sqr(p.z);
    E z2z2 = Ops::sqr(q.z);
    E u1 = Ops::mul(p.x, z2z2);
    E u2 = Ops::mul(q.x, z1z1);
    E s1 = Ops::mul(p.y, Ops::mul(q.z, z2z2));
    E s2 = Ops::mul(q.y, Ops::mul(p.z, z1z1));
    E h = Ops::sub(u2, u1);
    E rr = Ops::sub(s2, s1);
    if (Ops::is_zero(h)) {
      if (Ops::is_zero(rr)) return dbl(p);
      return infinity();
    }
    E i = Ops::sqr(Ops::add(h, h));
    E j = Ops::mul(h, i);
    E r2 = Ops::add(rr, rr);
    E v = Ops::mul(u1, i);
    E x3 = Ops::sub(Ops::sub(Ops::sqr(r2), j), Ops::add(v, v));
    E s1j = Ops::mul(s1, j);
    E y3 = Ops::sub(Ops::mul(r2, Ops::sub(v, x3)), Ops::add(s1j, s1j));
    E z3 = Ops::mul(
        Ops::sub(Ops::sub(Ops::sqr(Ops::add(p.z, q.z)), z1z1), z2z2), h);
    return {x3, y3, z3};
  }

  // Fixed-iteration ladder for secret scalars: one add and one double
  // per bit, independent of the bit value.
  static Jac scalar_mul_ladder(const Jac& p, const mpz_class& k,
                               std::size_t bits) {
    Jac r0 = infinity();
    Jac r1 = p;
    for (std::size_t i = bits; i-- > 0;) {
      if (mpz_tstbit(k.get_mpz_t(), i) == 0) {
        r1 = add(r0, r1);
        r0 = dbl(r0);
      } else {
        r0 = add(r0, r1);
        r1 = dbl(r1);
      }
    }
    return r0;
  }

  // Double-and-add for public scalars (subgroup checks, cofactors).
  static Jac scalar_mul_vartime(const Jac& p, const mpz_class& k) {
    if (k == 0 || is_infinity(p)) return infinity();
    Jac acc = p;
    for (mp_bitcnt_t i = mpz_sizeinbase(k.get_mpz_t(), 2) - 1; i-- > 0;) {
      acc = dbl(acc);
      if (mpz_tstbit(k.get_mpz_t(), i)) acc = add(acc, p);
    }
    return acc;
  }

  static bool on_curve(const E& x, const E& y, const E& b) {
    E lhs = Ops::sqr(y);
    E rhs = Ops::add(Ops::mul(Ops::sqr(x), x), b);
    return Ops::is_zero(Ops::sub(lhs, rhs));
  }
};

using G1Curve = CurveOps<FpOps>;
using G2Curve = CurveOps<Fp2Ops>;

// Curve constants, generators, and pairing precomputation. The
// constructor re-derives every relation between the hardcoded values
// and aborts on mismatch, so a single typo cannot survive startup.
class Ctx {
 public:
  static const Ctx& get() {
    static const Ctx instance;
    return instance;
  }

  mpz_class p;        // base field prime
  mpz_class r;        // G1/G2/GT order
  mpz_class u_abs;    // |u|, the BLS parameter (u itself is negative)
  mpz_class h1;       // G1 cofactor (u-1)^2/3
  mpz_class hard_exp; // (p^4 - p^2 + 1)/r, hard part of final exp
  G1Affine g1;
  G2Affine g2;
  Fp2 twist_b;        // 4(1+u)
  mpz_class curve_b;  // 4
  Fp12 winv2, winv3;  // w^-2, w^-3 for the untwist map
  std::array<mpz_class, 6> gamma;  // xi^(i(p^2-1)/6) in Fp, i = 0..5

 private:
  Ctx() {
    p = fp_prime();
    r = mpz_class(
        "0x73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001");
    u_abs = mpz_class("0xd201000000010000");
    curve_b = 4;
    twist_b = fp2_mul_fp(fp2_mul_xi(fp2_one()), mpz_class(4));

    g1.x = mpz_class(
        "0x17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac58"
        "6c55e83ff97a1aeffb3af00adb22c6bb");
    g1.y = mpz_class(
        "0x08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2c04b3ed"
        "d03cc744a2888ae40caa232946c5e7e1");
    g1.infinity = false;

    g2.x.c0 = mpz_class(
        "0x024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d177"
        "0bac0326a805bbefd48056c8c121bdb8");
    g2.x.c1 = mpz_class(
        "0x13e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049"
        "334cf11213945d57e5ac7d055d042b7e");
    g2.y.c0 = mpz_class(
        "0x0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a76d429a695160d12c"
        "923ac9cc3baca289e193548608b82801");
    g2.y.c1 = mpz_class(
        "0x0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af267492ab572e99ab"
        "3f370d275cec1da1aaa9075ff05f79be");
    g2.infinity = false;

    // Parameter identities: p and r are determined by u.
    mpz_class u = -u_abs;
    mpz_class u2 = u * u;
    mpz_class rt = u2 * u2 - u2 + 1;
    if (rt != r) throw UsageError("bls381: r does not match parameter u");
    mpz_class pt = (u - 1) * (u - 1) * rt;
    mpz_class rem;
    mpz_fdiv_qr(pt.get_mpz_t(), rem.get_mpz_t(), pt.get_mpz_t(),
                mpz_class(3).get_mpz_t());
    if (rem != 0) throw UsageError("bls381: (u-1)^2 r not divisible by 3");
    pt += u;
    if (pt != p) throw UsageError("bls381: p does not match parameter u");

    h1 = (u - 1) * (u - 1) / 3;
    if (h1 * r != p + u_abs) throw UsageError("bls381: cofactor mismatch");

    mpz_class p2 = p * p;
    mpz_class cyc = p2 * p2 - p2 + 1;
    mpz_class q, rem2;
    mpz_fdiv_qr(q.get_mpz_t(), rem2.get_mpz_t(), cyc.get_mpz_t(),
                r.get_mpz_t());
    if (rem2 != 0) throw UsageError("bls381: r does not divide p^4-p^2+1");
    hard_exp = q;

    // gamma_i = xi^(i(p^2-1)/6) are sixth roots of unity in Fp.
    mpz_class step = (p2 - 1) / 6;
    Fp2 xi = fp2_mul_xi(fp2_one());
    for (int i = 0; i < 6; ++i) {
      Fp2 g = fp2_pow(xi, step * i);
      if (g.c1 != 0) throw UsageError("bls381: gamma coefficient not in Fp");
      gamma[static_cast<std::size_t>(i)] = g.c0;
    }

    // w^-2 and w^-3 for the untwist map.
    Fp12 w{fp6_zero(), fp6_one()};
    winv2 = fp12_inv(fp12_mul(w, w));
    winv3 = fp12_inv(fp12_mul(fp12_mul(w, w), w));

    if (!G1Curve::on_curve(g1.x, g1.y, curve_b)) {
      throw UsageError("bls381: g1 generator not on curve");
    }
    if (!G2Curve::on_curve(g2.x, g2.y, twist_b)) {
      throw UsageError("bls381: g2 generator not on twist");
    }
  }
};

// ------------------------------------------------------ group checks --

inline bool g1_in_subgroup(const G1Affine& a) {
  if (a.infinity) return true;
  const Ctx& c = Ctx::get();
  if (!G1Curve::on_curve(a.x, a.y, c.curve_b)) return false;
  G1Curve::Jac m =
      G1Curve::scalar_mul_vartime(G1Curve::from_affine(a.x, a.y), c.r);
  return G1Curve::is_infinity(m);
}

inline bool g2_in_subgroup(const G2Affine& a) {
  if (a.infinity) return true;
  const Ctx& c = Ctx::get();
  if (!G2Curve::on_curve(a.x, a.y, c.twist_b)) return false;
  G2Curve::Jac m =
      G2Curve::scalar_mul_vartime(G2Curve::from_affine(a.x, a.y), c.r);
  return G2Curve::is_infinity(m);
}

inline bool gt_in_subgroup(const Fp12& a) {
  return fp12_is_one(fp12_pow(a, Ctx::get().r));
}

// ----------------------------------------------------------- pairing --

inline Fp12 fp12_from_fp2(const Fp2& a) {
  Fp12 r = fp12_zero();
  r.c0.c0 = a;
  return r;
}

inline Fp12 fp12_from_fp(const mpz_class& a) {
  Fp12 r = fp12_zero();
  r.c0.c0.c0 = a;
  return r;
}

// Frobenius^2: multiplies the w^i coefficient by gamma_i. The Fp2
// coefficients themselves are fixed because |Fp2| = p^2.
inline Fp12 frob_p2(const Fp12& a) {
  const auto& g = Ctx::get().gamma;
  Fp12 r;
  r.c0.c0 = a.c0.c0;                     // w^0
  r.c1.c0 = fp2_mul_fp(a.c1.c0, g[1]);   // w^1
  r.c0.c1 = fp2_mul_fp(a.c0.c1, g[2]);   // w^2
  r.c1.c1 = fp2_mul_fp(a.c1.c1, g[3]);   // w^3
  r.c0.c2 = fp2_mul_fp(a.c0.c2, g[4]);   // w^4
  r.c1.c2 = fp2_mul_fp(a.c1.c2, g[5]);   // w^5
  return r;
}

// Untwisted G2 point, as affine coordinates in E(Fp12).
struct UntwistedPoint {
  Fp12 x, y;
};

inline UntwistedPoint untwist(const G2Affine& q) {
  const Ctx& c = Ctx::get();
  return {fp12_mul(fp12_from_fp2(q.x), c.winv2),
          fp12_mul(fp12_from_fp2(q.y), c.winv3)};
}

// Miller function f_{|u|,Q}(P) with textbook affine line evaluations
// over Fp12. Vertical lines are omitted: their values lie in Fp6 and
// the p^6-1 factor of the final exponentiation kills them. The inverse
// at the end accounts for u < 0.
inline Fp12 miller_loop(const G1Affine& pt, const G2Affine& qt) {
  if (pt.infinity || qt.infinity) return fp12_one();
  const Ctx& c = Ctx::get();
  UntwistedPoint q = untwist(qt);
  Fp12 px = fp12_from_fp(pt.x);
  Fp12 py = fp12_from_fp(pt.y);

  Fp12 tx = q.x;
  Fp12 ty = q.y;
  Fp12 f = fp12_one();
  const mpz_class& n = c.u_abs;
  for (mp_bitcnt_t i = mpz_sizeinbase(n.get_mpz_t(), 2) - 1; i-- > 0;) {
    // Tangent at T, evaluated at P.
    Fp12 lambda = fp12_mul(
        fp12_mul(fp12_sqr(tx), fp12_from_fp(mpz_class(3))),
        fp12_inv(fp12_add(ty, ty)));
    Fp12 line =
        fp12_sub(fp12_sub(py, ty), fp12_mul(lambda, fp12_sub(px, tx)));
    f = fp12_mul(fp12_sqr(f), line);
    Fp12 x3 = fp12_sub(fp12_sqr(lambda), fp12_add(tx, tx));
    ty = fp12_sub(fp12_mul(lambda, fp12_sub(tx, x3)), ty);
    tx = x3;

    if (mpz_tstbit(n.get_mpz_t(), i)) {
      // Chord through T and Q, evaluated at P.
      lambda = fp12_mul(fp12_sub(q.y, ty), fp12_inv(fp12_sub(q.x, tx)));
      line = fp12_sub(fp12_sub(py, ty), fp12_mul(lambda, fp12_sub(px, tx)));
      f = fp12_mul(f, line);
      x3 = fp12_sub(fp12_sub(fp12_sqr(lambda), tx), q.x);
      ty = fp12_sub(fp12_mul(lambda, fp12_sub(tx, x3)), ty);
      tx = x3;
    }
  }
  return fp12_inv(f);
}

inline Fp12 final_exponentiation(const Fp12& f) {
  const Ctx& c = Ctx::get();
  Fp12 t = fp12_mul(fp12_conj(f), fp12_inv(f));  // ^(p^6 - 1)
  t = fp12_mul(frob_p2(t), t);                   // ^(p^2 + 1)
  return fp12_pow(t, c.hard_exp);                // ^((p^4 - p^2 + 1)/r)
}

inline Fp12 pairing(const G1Affine& p, const G2Affine& q) {
  return final_exponentiation(miller_loop(p, q));
}

// Product of pairings with one shared final exponentiation.
inline Fp12 pairing_product(
    const std::vector<std::pair<G1Affine, G2Affine>>& pairs) {
  Fp12 acc = fp12_one();
  bool any = false;
  for (const auto& [p, q] : pairs) {
    if (p.infinity || q.infinity) continue;
    acc = fp12_mul(acc, miller_loop(p, q));
    any = true;
  }
  if (!any) return fp12_one();
  return final_exponentiation(acc);
}

// ----------------------------------------------------- serialization --

// 48-byte compressed G1: big-endian x with flag bits in the top byte.
// 0x80 = compressed (always set), 0x40 = infinity, 0x20 = y is the
// lexicographically larger root.
inline Bytes g1_encode(const G1Affine& a) {
  Bytes out(48, 0);
  if (a.infinity) {
    out[0] = 0xc0;
    return out;
  }
  mpz_to_be(a.x, out.data(), 48);
  out[0] |= 0x80;
  if (fp_lex_largest(a.y)) out[0] |= 0x20;
  return out;
}

inline G1Affine g1_decode(ByteSpan data) {
  if (data.size() != 48) throw WireError("G1 element must be 48 bytes");
  const std::uint8_t flags = data[0] & 0xe0;
  if (!(flags & 0x80)) throw WireError("G1 element must be compressed");
  if (flags & 0x40) {
    if (flags != 0xc0) throw WireError("non-canonical G1 infinity flags");
    for (std::size_t i = 0; i < 48; ++i) {
      if ((data[i] & (i == 0 ? 0x3f : 0xff)) != 0) {
        throw WireError("non-canonical G1 infinity");
      }
    }
    return G1Affine{};
  }
  Bytes masked(data.begin(), data.end());
  masked[0] &= 0x1f;
  mpz_class x = mpz_from_be(masked);
  if (x >= fp_prime()) throw WireError("G1 x-coordinate out of range");
  std::optional<mpz_class> y =
      fp_sqrt(fp_add(fp_mul(fp_sqr(x), x), Ctx::get().curve_b));
  if (!y) throw WireError("G1 x-coordinate not on curve");
  const bool want_largest = (flags & 0x20) != 0;
  if (fp_lex_largest(*y) != want_largest) *y = fp_neg(*y);
  if (fp_lex_largest(*y) != want_largest) {
    throw WireError("non-canonical G1 sign bit");
  }
  G1Affine a{std::move(x), std::move(*y), false};
  if (!g1_in_subgroup(a)) throw WireError("G1 element not in subgroup");
  return a;
}

// 96-byte compressed G2: x.c1 then x.c0, flags as for G1; the sign
// compares (c1, c0) lexicographically.
inline Bytes g2_encode(const G2Affine& a) {
  Bytes out(96, 0);
  if (a.infinity) {
    out[0] = 0xc0;
    return out;
  }
  mpz_to_be(a.x.c1, out.data(), 48);
  mpz_to_be(a.x.c0, out.data() + 48, 48);
  out[0] |= 0x80;
  if (fp2_lex_largest(a.y)) out[0] |= 0x20;
  return out;
}

inline G2Affine g2_decode(ByteSpan data) {
  if (data.size() != 96) throw WireError("G2 element must be 96 bytes");
  const std::uint8_t flags = data[0] & 0xe0;
  if (!(flags & 0x80)) throw WireError("G2 element must be compressed");
  if (flags & 0x40) {
    if (flags != 0xc0) throw WireError("non-canonical G2 infinity flags");
    for (std::size_t i = 0; i < 96; ++i) {
      if ((data[i] & (i == 0 ? 0x3f : 0xff)) != 0) {
        throw WireError("non-canonical G2 infinity");
      }
    }
    return G2Affine{};
  }
  Bytes masked(data.begin(), data.begin() + 48);
  masked[0] &= 0x1f;
  Fp2 x;
  x.c1 = mpz_from_be(masked);
  x.c0 = mpz_from_be(data.subspan(48, 48));
  if (x.c0 >= fp_prime() || x.c1 >= fp_prime()) {
    throw WireError("G2 x-coordinate out of range");
  }
  std::optional<Fp2> y =
      fp2_sqrt(fp2_add(fp2_mul(fp2_sqr(x), x), Ctx::get().twist_b));
  if (!y) throw WireError("G2 x-coordinate not on twist");
  const bool want_largest = (flags & 0x20) != 0;
  if (fp2_lex_largest(*y) != want_largest) *y = fp2_neg(*y);
  if (fp2_lex_largest(*y) != want_largest) {
    throw WireError("non-canonical G2 sign bit");
  }
  G2Affine a{x, *y, false};
  if (!g2_in_subgroup(a)) throw WireError("G2 element not in subgroup");
  return a;
}

// 576-byte GT: the 12 Fp coordinates in tower nesting order
// (c0.c0.c0, c0.c0.c1, c0.c1.c0, ..., c1.c2.c1), 48-byte big-endian
// each. The representation is unique, so byte equality is element
// equality.
inline Bytes gt_encode(const Fp12& a) {
  Bytes out(576, 0);
  const Fp2* coeffs[6] = {&a.c0.c0, &a.c0.c1, &a.c0.c2,
                          &a.c1.c0, &a.c1.c1, &a.c1.c2};
  std::size_t off = 0;
  for (const Fp2* c : coeffs) {
    mpz_to_be(c->c0, out.data() + off, 48);
    mpz_to_be(c->c1, out.data() + off + 48, 48);
    off += 96;
  }
  return out;
}

inline Fp12 gt_decode(ByteSpan data) {
  if (data.size() != 576) throw WireError("GT element must be 576 bytes");
  Fp12 a;
  Fp2* coeffs[6] = {&a.c0.c0, &a.c0.c1, &a.c0.c2,
                    &a.c1.c0, &a.c1.c1, &a.c1.c2};
  std::size_t off = 0;
  for (Fp2* c : coeffs) {
    c->c0 = mpz_from_be(data.subspan(off, 48));
    c->c1 = mpz_from_be(data.subspan(off + 48, 48));
    if (c->c0 >= fp_prime() || c->c1 >= fp_prime()) {
      throw WireError("GT coordinate out of range");
    }
    off += 96;
  }
  if (!gt_in_subgroup(a)) throw WireError("GT element not in subgroup");
  return a;
}

// ------------------------------------------------------ hash to G1 --

// Deterministic try-and-increment: derive a 512-bit candidate x from
// two hash blocks, take the lexicographically smaller root, clear the
// cofactor. Runtime varies with the input; attribute names are public.
inline G1Affine hash_to_g1(ByteSpan data) {
  const Ctx& c = Ctx::get();
  for (std::uint32_t ctr = 0;; ++ctr) {
    Bytes pre;
    pre.reserve(data.size() + 20);
    append(pre, as_bytes("ABKA-BLS381-G1"));
    append_u32(pre, ctr);
    pre.push_back(0x00);
    append(pre, data);
    Digest32 h0 = sha256(pre);
    pre[pre.size() - data.size() - 1] = 0x01;
    Digest32 h1 = sha256(pre);

    Bytes wide;
    wide.reserve(64);
    append(wide, ByteSpan(h0.data(), h0.size()));
    append(wide, ByteSpan(h1.data(), h1.size()));
    mpz_class x = mod(mpz_from_be(wide), c.p);

    std::optional<mpz_class> y =
        fp_sqrt(fp_add(fp_mul(fp_sqr(x), x), c.curve_b));
    if (!y) continue;
    if (fp_lex_largest(*y)) *y = fp_neg(*y);
    if (*y == 0) continue;

    G1Curve::Jac cleared = G1Curve::scalar_mul_vartime(
        G1Curve::from_affine(x, *y), c.h1);
    G1Affine out;
    G1Curve::to_affine(cleared, out.x, out.y, out.infinity);
    if (out.infinity) continue;
    return out;
  }
}

}  // namespace bls381
}  // namespace abka

#endif  // ABKA_DETAIL_BLS381_CURVE_HPP
