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

#include <catch2/catch_amalgamated.hpp>

#include "abka/mock_suite.hpp"

using namespace abka;

TEST_CASE("mock suite rejects bad moduli", "[mock]") {
  REQUIRE_THROWS_AS(MockSuite(4), UsageError);
  REQUIRE_THROWS_AS(MockSuite(1000), UsageError);   // composite
  REQUIRE_THROWS_AS(MockSuite(1ull << 61), UsageError);
  REQUIRE_NOTHROW(MockSuite(1009));
  REQUIRE_NOTHROW(MockSuite());  // 2^61 - 1 is prime
}

TEST_CASE("mock group laws via the exponent trapdoor", "[mock]") {
  MockSuite s(1009);
  REQUIRE(s.order() == 1009);
  REQUIRE(s.security_level() == 0);

  GroupElement a = s.from_exponent(GroupTag::g1, 700);
  GroupElement b = s.from_exponent(GroupTag::g1, 500);
  REQUIRE(s.exponent_of(s.mul(a, b)) == (700 + 500) % 1009);
  REQUIRE(s.exponent_of(s.inverse(a)) == 1009 - 700);
  REQUIRE(s.is_identity(s.mul(a, s.inverse(a))));
  REQUIRE(s.exponent_of(s.exp(a, Scalar(3ul))) == (700 * 3) % 1009);
  REQUIRE(s.exponent_of(s.generator(GroupTag::g2)) == 1);
  REQUIRE(s.is_identity(s.identity(GroupTag::gt)));

  SECTION("scalars reduce mod p before use") {
    REQUIRE(s.equal(s.exp(a, Scalar(1009ul + 3)), s.exp(a, Scalar(3ul))));
  }

  SECTION("cross-group mul is rejected") {
    GroupElement g2 = s.generator(GroupTag::g2);
    REQUIRE_THROWS_AS(s.mul(a, g2), UsageError);
  }
}

TEST_CASE("mock pairing multiplies exponents", "[mock]") {
  MockSuite s(1009);
  GroupElement x = s.from_exponent(GroupTag::g1, 6);
  GroupElement y = s.from_exponent(GroupTag::g2, 35);
  REQUIRE(s.exponent_of(s.pairing(x, y)) == 210);

  SECTION("bilinear in both arguments") {
    GroupElement lhs = s.pairing(s.exp(x, Scalar(5ul)), y);
    GroupElement rhs = s.exp(s.pairing(x, y), Scalar(5ul));
    REQUIRE(s.equal(lhs, rhs));
  }

  SECTION("argument groups are enforced") {
    REQUIRE_THROWS_AS(s.pairing(y, y), UsageError);
    REQUIRE_THROWS_AS(s.pairing(x, x), UsageError);
  }

  SECTION("pairing_product multiplies pairings") {
    GroupElement u = s.from_exponent(GroupTag::g1, 11);
    GroupElement v = s.from_exponent(GroupTag::g2, 13);
    GroupElement prod = s.pairing_product({{x, y}, {u, v}});
    REQUIRE(s.exponent_of(prod) == (210 + 11 * 13) % 1009);
  }
}

TEST_CASE("mock hash_to_g1 is deterministic and in range", "[mock]") {
  MockSuite s(1009);
  GroupElement h1 = s.hash_to_g1(as_bytes("doctor"));
  GroupElement h2 = s.hash_to_g1(as_bytes("doctor"));
  GroupElement h3 = s.hash_to_g1(as_bytes("nurse"));
  REQUIRE(s.equal(h1, h2));
  REQUIRE_FALSE(s.equal(h1, h3));
  REQUIRE(h1.tag() == GroupTag::g1);
  REQUIRE(s.exponent_of(h1) < 1009);
}

TEST_CASE("mock encoding is 8-byte big-endian and canonical", "[mock]") {
  MockSuite s(1009);
  GroupElement e = s.from_exponent(GroupTag::gt, 0x0102);
  Bytes bytes = s.encode(e);
  REQUIRE(bytes == Bytes{0, 0, 0, 0, 0, 0, 0x01, 0x02});
  REQUIRE(s.equal(s.decode(GroupTag::gt, bytes), e));

  SECTION("non-reduced exponents are rejected") {
    Bytes big{0, 0, 0, 0, 0, 0, 0x03, 0xf1};  // 1009
    REQUIRE_THROWS_AS(s.decode(GroupTag::g1, big), WireError);
  }

  SECTION("wrong length is rejected") {
    REQUIRE_THROWS_AS(s.decode(GroupTag::g1, ByteSpan(bytes.data(), 7)),
                      WireError);
  }
}

TEST_CASE("elements refuse suites they were not made by", "[mock]") {
  MockSuite a(1009);
  MockSuite b(1013);
  // Same suite id: representation is compatible by construction.
  REQUIRE(a.exponent_of(b.generator(GroupTag::g1)) == 1);
  // Empty elements are rejected everywhere.
  GroupElement empty;
  REQUIRE_THROWS_AS(a.exponent_of(empty), UsageError);
}
