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

#ifndef ABKA_BLS381_SUITE_HPP
#define ABKA_BLS381_SUITE_HPP

#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "abka/detail/bls381_curve.hpp"
#include "abka/suite.hpp"

namespace abka {

// BLS12-381 pairing suite (128-bit security). Secret-dependent group
// operations use fixed-iteration ladders; see docs for the residual
// caveats of bignum-backed arithmetic.
class Bls381Suite final : public Suite {
 public:
  static constexpr std::uint8_t kSuiteId = 0x01;

  Bls381Suite() : ctx_(bls381::Ctx::get()) {}

  std::uint8_t id() const override { return kSuiteId; }
  std::string name() const override { return "bls12-381"; }
  unsigned security_level() const override { return 128; }
  const mpz_class& order() const override { return ctx_.r; }

  std::size_t element_size(GroupTag tag) const override {
    switch (tag) {
      case GroupTag::g1: return 48;
      case GroupTag::g2: return 96;
      case GroupTag::gt: return 576;
    }
    throw UsageError("unknown group tag");
  }

  GroupElement generator(GroupTag tag) const override {
    switch (tag) {
      case GroupTag::g1:
        return wrap(ctx_.g1);
      case GroupTag::g2:
        return wrap(ctx_.g2);
      case GroupTag::gt: {
        std::call_once(gt_gen_once_, [this] {
          gt_gen_ = bls381::pairing(ctx_.g1, ctx_.g2);
        });
        return wrap(gt_gen_);
      }
    }
    throw UsageError("unknown group tag");
  }

  GroupElement identity(GroupTag tag) const override {
    switch (tag) {
      case GroupTag::g1: return wrap(bls381::G1Affine{});
      case GroupTag::g2: return wrap(bls381::G2Affine{});
      case GroupTag::gt: return wrap(bls381::fp12_one());
    }
    throw UsageError("unknown group tag");
  }

  bool is_identity(const GroupElement& e) const override {
    switch (e.tag()) {
      case GroupTag::g1: return g1(e).infinity;
      case GroupTag::g2: return g2(e).infinity;
      case GroupTag::gt: return bls381::fp12_is_one(gt(e));
    }
    throw UsageError("unknown group tag");
  }

  bool equal(const GroupElement& a, const GroupElement& b) const override {
    if (a.tag() != b.tag()) return false;
    switch (a.tag()) {
      case GroupTag::g1: return g1(a) == g1(b);
      case GroupTag::g2: return g2(a) == g2(b);
      case GroupTag::gt: return gt(a) == gt(b);
    }
    throw UsageError("unknown group tag");
  }

  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    if (a.tag() != b.tag()) throw UsageError("group mismatch in mul");
    switch (a.tag()) {
      case GroupTag::g1: {
        bls381::G1Curve::Jac s =
            bls381::G1Curve::add(to_jac(g1(a)), to_jac(g1(b)));
        return wrap(from_jac_g1(s));
      }
      case GroupTag::g2: {
        bls381::G2Curve::Jac s =
            bls381::G2Curve::add(to_jac(g2(a)), to_jac(g2(b)));
        return wrap(from_jac_g2(s));
      }
      case GroupTag::gt:
        return wrap(bls381::fp12_mul(gt(a), gt(b)));
    }
    throw UsageError("unknown group tag");
  }

  GroupElement inverse(const GroupElement& e) const override {
    switch (e.tag()) {
      case GroupTag::g1: {
        bls381::G1Affine a = g1(e);
        if (!a.infinity) a.y = bls381::fp_neg(a.y);
        return wrap(std::move(a));
      }
      case GroupTag::g2: {
        bls381::G2Affine a = g2(e);
        if (!a.infinity) a.y = bls381::fp2_neg(a.y);
        return wrap(std::move(a));
      }
      case GroupTag::gt:
        return wrap(bls381::fp12_inv(gt(e)));
    }
    throw UsageError("unknown group tag");
  }

  GroupElement exp(const GroupElement& base, const Scalar& k) const override {
    mpz_class e = mod(k.value, ctx_.r);
    const std::size_t bits = 255;  // ceil(log2 r)
    switch (base.tag()) {
      case GroupTag::g1: {
        bls381::G1Curve::Jac m = bls381::G1Curve::scalar_mul_ladder(
            to_jac(g1(base)), e, bits);
        return wrap(from_jac_g1(m));
      }
      case GroupTag::g2: {
        bls381::G2Curve::Jac m = bls381::G2Curve::scalar_mul_ladder(
            to_jac(g2(base)), e, bits);
        return wrap(from_jac_g2(m));
      }
      case GroupTag::gt:
        return wrap(bls381::fp12_pow_ladder(gt(base), e, bits));
    }
    throw UsageError("unknown group tag");
  }

  GroupElement pairing(const GroupElement& a,
                       const GroupElement& b) const override {
    if (a.tag() != GroupTag::g1 || b.tag() != GroupTag::g2) {
      throw UsageError("pairing expects (G1, G2)");
    }
    return wrap(bls381::pairing(g1(a), g2(b)));
  }

  GroupElement pairing_product(
      const std::vector<std::pair<GroupElement, GroupElement>>& pairs)
      const override {
    std::vector<std::pair<bls381::G1Affine, bls381::G2Affine>> native;
    native.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      if (a.tag() != GroupTag::g1 || b.tag() != GroupTag::g2) {
        throw UsageError("pairing expects (G1, G2)");
      }
      native.emplace_back(g1(a), g2(b));
    }
    return wrap(bls381::pairing_product(native));
  }

  GroupElement hash_to_g1(ByteSpan data) const override {
    return wrap(bls381::hash_to_g1(data));
  }

  Bytes encode(const GroupElement& e) const override {
    switch (e.tag()) {
      case GroupTag::g1: return bls381::g1_encode(g1(e));
      case GroupTag::g2: return bls381::g2_encode(g2(e));
      case GroupTag::gt: return bls381::gt_encode(gt(e));
    }
    throw UsageError("unknown group tag");
  }

  GroupElement decode(GroupTag tag, ByteSpan data) const override {
    switch (tag) {
      case GroupTag::g1: return wrap(bls381::g1_decode(data));
      case GroupTag::g2: return wrap(bls381::g2_decode(data));
      case GroupTag::gt: return wrap(bls381::gt_decode(data));
    }
    throw UsageError("unknown group tag");
  }

 private:
  GroupElement wrap(bls381::G1Affine a) const {
    return detail::make_element(GroupTag::g1, kSuiteId, std::move(a));
  }
  GroupElement wrap(bls381::G2Affine a) const {
    return detail::make_element(GroupTag::g2, kSuiteId, std::move(a));
  }
  GroupElement wrap(bls381::Fp12 a) const {
    return detail::make_element(GroupTag::gt, kSuiteId, std::move(a));
  }

  static const bls381::G1Affine& g1(const GroupElement& e) {
    if (e.tag() != GroupTag::g1) throw UsageError("expected G1 element");
    return detail::rep_as<bls381::G1Affine>(e, kSuiteId);
  }
  static const bls381::G2Affine& g2(const GroupElement& e) {
    if (e.tag() != GroupTag::g2) throw UsageError("expected G2 element");
    return detail::rep_as<bls381::G2Affine>(e, kSuiteId);
  }
  static const bls381::Fp12& gt(const GroupElement& e) {
    if (e.tag() != GroupTag::gt) throw UsageError("expected GT element");
    return detail::rep_as<bls381::Fp12>(e, kSuiteId);
  }

  static bls381::G1Curve::Jac to_jac(const bls381::G1Affine& a) {
    if (a.infinity) return bls381::G1Curve::infinity();
    return bls381::G1Curve::from_affine(a.x, a.y);
  }
  static bls381::G2Curve::Jac to_jac(const bls381::G2Affine& a) {
    if (a.infinity) return bls381::G2Curve::infinity();
    return bls381::G2Curve::from_affine(a.x, a.y);
  }
  static bls381::G1Affine from_jac_g1(const bls381::G1Curve::Jac& j) {
    bls381::G1Affine a;
    bls381::G1Curve::to_affine(j, a.x, a.y, a.infinity);
    return a;
  }
  static bls381::G2Affine from_jac_g2(const bls381::G2Curve::Jac& j) {
    bls381::G2Affine a;
    bls381::G2Curve::to_affine(j, a.x, a.y, a.infinity);
    return a;
  }

  const bls381::Ctx& ctx_;
  mutable std::once_flag gt_gen_once_;
  mutable bls381::Fp12 gt_gen_;
};

}  // namespace abka

#endif  // ABKA_BLS381_SUITE_HPP
