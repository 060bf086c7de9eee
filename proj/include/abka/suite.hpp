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

#ifndef ABKA_SUITE_HPP
#define ABKA_SUITE_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "abka/bytes.hpp"
#include "abka/errors.hpp"
#include "abka/scalar.hpp"

namespace abka {

enum class GroupTag : std::uint8_t { g1 = 1, g2 = 2, gt = 3 };

inline const char* group_name(GroupTag tag) {
  switch (tag) {
    case GroupTag::g1: return "G1";
    case GroupTag::g2: return "G2";
    case GroupTag::gt: return "GT";
  }
  return "?";
}

// Opaque handle to a group element. The representation is owned by the
// suite that produced it; elements are immutable and cheap to copy.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(GroupTag tag, std::uint8_t suite_id,
               std::shared_ptr<const void> rep)
      : tag_(tag), suite_id_(suite_id), rep_(std::move(rep)) {}

  GroupTag tag() const { return tag_; }
  std::uint8_t suite_id() const { return suite_id_; }
  bool empty() const { return rep_ == nullptr; }
  const void* raw() const { return rep_.get(); }

 private:
  GroupTag tag_ = GroupTag::g1;
  std::uint8_t suite_id_ = 0;
  std::shared_ptr<const void> rep_;
};

namespace detail {

template <typename Rep>
GroupElement make_element(GroupTag tag, std::uint8_t suite_id, Rep rep) {
  return GroupElement(tag, suite_id,
                      std::make_shared<const Rep>(std::move(rep)));
}

template <typename Rep>
const Rep& rep_as(const GroupElement& e, std::uint8_t expected_suite) {
  if (e.empty()) throw UsageError("uninitialized group element");
  if (e.suite_id() != expected_suite) {
    throw UsageError("group element belongs to a different suite");
  }
  return *static_cast<const Rep*>(e.raw());
}

}  // namespace detail

// A pairing group triple (G1, G2, GT) of prime order with asymmetric
// pairing e: G1 x G2 -> GT, written multiplicatively throughout.
class Suite {
 public:
  virtual ~Suite() = default;

  virtual std::uint8_t id() const = 0;
  virtual std::string name() const = 0;
  // Claimed security in bits; 0 marks a toy suite unfit for production.
  virtual unsigned security_level() const = 0;
  virtual const mpz_class& order() const = 0;
  virtual std::size_t element_size(GroupTag tag) const = 0;

  std::size_t scalar_size() const { return byte_length(order()); }

  virtual GroupElement generator(GroupTag tag) const = 0;
  virtual GroupElement identity(GroupTag tag) const = 0;
  virtual bool is_identity(const GroupElement& e) const = 0;
  virtual bool equal(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement mul(const GroupElement& a,
                           const GroupElement& b) const = 0;
  virtual GroupElement inverse(const GroupElement& e) const = 0;
  virtual GroupElement exp(const GroupElement& base,
                           const Scalar& exponent) const = 0;
  virtual GroupElement pairing(const GroupElement& a,
                               const GroupElement& b) const = 0;
  virtual GroupElement hash_to_g1(ByteSpan data) const = 0;

  // prod_i e(pairs[i].first, pairs[i].second); suites may share work
  // across the terms.
  virtual GroupElement pairing_product(
      const std::vector<std::pair<GroupElement, GroupElement>>& pairs) const {
    if (pairs.empty()) return identity(GroupTag::gt);
    GroupElement acc = pairing(pairs[0].first, pairs[0].second);
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      acc = mul(acc, pairing(pairs[i].first, pairs[i].second));
    }
    return acc;
  }

  // Fixed-width canonical encoding; decode rejects anything that is not
  // the canonical encoding of a valid element of the tagged group.
  virtual Bytes encode(const GroupElement& e) const = 0;
  virtual GroupElement decode(GroupTag tag, ByteSpan data) const = 0;
};

}  // namespace abka

#endif  // ABKA_SUITE_HPP
