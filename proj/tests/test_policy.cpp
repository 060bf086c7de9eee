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

#include "abka/policy.hpp"
#include "helpers.hpp"

using namespace abka;
using abka::testing::all_formulas;

namespace {

AttributeSet attrs(std::vector<std::string> names) {
  return AttributeSet(std::move(names));
}

// sum_i d_i * M[row_i] over Z_p, padded to cols entries.
std::vector<mpz_class> recombine(const MspProgram& msp,
                                 const SatisfyingAssignment& a,
                                 const mpz_class& p) {
  std::vector<mpz_class> acc(msp.cols, 0);
  for (std::size_t k = 0; k < a.indices.size(); ++k) {
    for (std::size_t j = 0; j < msp.cols; ++j) {
      acc[j] = mod(acc[j] + a.coefficients[k].value * msp.at(a.indices[k], j),
                   p);
    }
  }
  return acc;
}

bool recombines_to_e1(const MspProgram& msp, const SatisfyingAssignment& a,
                      const mpz_class& p) {
  std::vector<mpz_class> acc = recombine(msp, a, p);
  if (acc[0] != 1) return false;
  for (std::size_t j = 1; j < acc.size(); ++j) {
    if (acc[j] != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("attribute sets sort, dedupe, and index", "[policy]") {
  AttributeSet s = attrs({"doctor", "admin", "doctor", "nurse"});
  REQUIRE(s.size() == 3);
  REQUIRE(s.names() == std::vector<std::string>{"admin", "doctor", "nurse"});
  REQUIRE(s.contains("doctor"));
  REQUIRE_FALSE(s.contains("intern"));
  REQUIRE(s.index_of("doctor") == 1);
  REQUIRE_FALSE(s.index_of("intern").has_value());
  REQUIRE_THROWS_AS(attrs({""}), UsageError);
}

TEST_CASE("parser builds the expected trees", "[policy]") {
  PolicyFormula f = parse_policy("A AND B");
  REQUIRE(f == PolicyFormula::and_gate(PolicyFormula::attribute("A"),
                                       PolicyFormula::attribute("B")));

  SECTION("AND binds tighter than OR") {
    PolicyFormula g = parse_policy("A OR B AND C");
    PolicyFormula expect = PolicyFormula::or_gate(
        PolicyFormula::attribute("A"),
        PolicyFormula::and_gate(PolicyFormula::attribute("B"),
                                PolicyFormula::attribute("C")));
    REQUIRE(g == expect);
  }

  SECTION("parentheses override precedence") {
    PolicyFormula g = parse_policy("(A OR B) AND C");
    PolicyFormula expect = PolicyFormula::and_gate(
        PolicyFormula::or_gate(PolicyFormula::attribute("A"),
                               PolicyFormula::attribute("B")),
        PolicyFormula::attribute("C"));
    REQUIRE(g == expect);
  }

  SECTION("keywords are case-insensitive, attributes are not") {
    REQUIRE(parse_policy("a and B") ==
            PolicyFormula::and_gate(PolicyFormula::attribute("a"),
                                    PolicyFormula::attribute("B")));
    REQUIRE_FALSE(parse_policy("a AND B") == parse_policy("A AND B"));
  }

  SECTION("attribute charset includes _ : . -") {
    PolicyFormula g = parse_policy("ward:icu AND x_1.y-2");
    REQUIRE(g.leaves() == std::vector<std::string>{"ward:icu", "x_1.y-2"});
  }

  SECTION("chained gates associate left") {
    REQUIRE(parse_policy("A AND B AND C") ==
            PolicyFormula::and_gate(
                PolicyFormula::and_gate(PolicyFormula::attribute("A"),
                                        PolicyFormula::attribute("B")),
                PolicyFormula::attribute("C")));
  }
}

TEST_CASE("parse errors carry byte offsets", "[policy]") {
  auto offset_of = [](const char* text) {
    try {
      parse_policy(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    FAIL("expected a parse error");
    return std::size_t(0);
  };

  REQUIRE_THROWS_AS(parse_policy(""), ParseError);
  REQUIRE_THROWS_AS(parse_policy("   "), ParseError);
  REQUIRE_THROWS_AS(parse_policy("A AND"), ParseError);
  REQUIRE_THROWS_AS(parse_policy("(A OR B"), ParseError);
  REQUIRE_THROWS_AS(parse_policy("A B"), ParseError);
  REQUIRE(offset_of("A B") == 2);
  REQUIRE(offset_of("A AND ()") == 7);

  SECTION("negation is rejected, not mis-parsed") {
    try {
      parse_policy("NOT A");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      REQUIRE(std::string(e.what()).find("negation") != std::string::npos);
    }
    REQUIRE_THROWS_AS(parse_policy("A AND NOT B"), ParseError);
  }
}

TEST_CASE("to_string round-trips through the parser", "[policy]") {
  for (const char* text :
       {"A", "A AND B", "A OR B AND C", "(A OR B) AND C",
        "ward:icu AND (doctor OR admin) AND x-1"}) {
    PolicyFormula f = parse_policy(text);
    REQUIRE(parse_policy(to_string(f)) == f);
  }
  // Canonical text adds parens only where precedence demands them.
  REQUIRE(to_string(parse_policy("(A AND B) OR C")) == "A AND B OR C");
  REQUIRE(to_string(parse_policy("(A OR B) AND C")) == "(A OR B) AND C");
}

TEST_CASE("satisfies evaluates the monotone formula", "[policy]") {
  PolicyFormula f = parse_policy("(doctor AND ward:icu) OR admin");
  REQUIRE(satisfies(f, attrs({"doctor", "ward:icu"})));
  REQUIRE(satisfies(f, attrs({"admin"})));
  REQUIRE(satisfies(f, attrs({"admin", "nurse"})));
  REQUIRE_FALSE(satisfies(f, attrs({"doctor"})));
  REQUIRE_FALSE(satisfies(f, attrs({"nurse"})));

  SECTION("monotone: adding attributes never unsatisfies") {
    testing::TestRand rand(7);
    std::vector<std::string> pool{"A", "B", "C", "D"};
    for (int t = 0; t < 200; ++t) {
      PolicyFormula g =
          testing::random_formula(rand, pool, 1 + rand.below(5));
      std::vector<std::string> base;
      for (const std::string& a : pool) {
        if (rand.flip()) base.push_back(a);
      }
      if (base.empty()) base.push_back("A");
      AttributeSet small = attrs(base);
      base.push_back("E");
      base.push_back(pool[rand.below(pool.size())]);
      AttributeSet big = attrs(base);
      if (satisfies(g, small)) REQUIRE(satisfies(g, big));
    }
  }
}

TEST_CASE("compile_msp matches the worked conversions", "[policy]") {
  SECTION("single attribute: 1x1 identity") {
    MspProgram m = compile_msp(parse_policy("A"));
    REQUIRE(m.rows == 1);
    REQUIRE(m.cols == 1);
    REQUIRE(m.at(0, 0) == 1);
    REQUIRE(m.labels == std::vector<std::string>{"A"});
  }

  SECTION("A AND B: rows (1,1) and (0,-1)") {
    MspProgram m = compile_msp(parse_policy("A AND B"));
    REQUIRE(m.rows == 2);
    REQUIRE(m.cols == 2);
    REQUIRE(m.at(0, 0) == 1);
    REQUIRE(m.at(0, 1) == 1);
    REQUIRE(m.at(1, 0) == 0);
    REQUIRE(m.at(1, 1) == -1);
    REQUIRE(m.labels == std::vector<std::string>{"A", "B"});
  }

  SECTION("A OR B: both rows (1)") {
    MspProgram m = compile_msp(parse_policy("A OR B"));
    REQUIRE(m.rows == 2);
    REQUIRE(m.cols == 1);
    REQUIRE(m.at(0, 0) == 1);
    REQUIRE(m.at(1, 0) == 1);
  }

  SECTION("A AND (B OR C): OR children share the AND's right vector") {
    MspProgram m = compile_msp(parse_policy("A AND (B OR C)"));
    REQUIRE(m.rows == 3);
    REQUIRE(m.cols == 2);
    REQUIRE((m.at(0, 0) == 1 && m.at(0, 1) == 1));
    REQUIRE((m.at(1, 0) == 0 && m.at(1, 1) == -1));
    REQUIRE((m.at(2, 0) == 0 && m.at(2, 1) == -1));
    REQUIRE(m.labels == std::vector<std::string>{"A", "B", "C"});
  }

  SECTION("(A AND B) OR (C AND D)") {
    MspProgram m = compile_msp(parse_policy("(A AND B) OR (C AND D)"));
    REQUIRE(m.rows == 4);
    REQUIRE(m.cols == 3);
    // left AND consumes column 2, right AND column 3.
    std::vector<long> expect{1, 1, 0,   //
                             0, -1, 0,  //
                             1, 0, 1,   //
                             0, 0, -1};
    for (std::size_t i = 0; i < expect.size(); ++i) {
      REQUIRE(m.entries[i] == expect[i]);
    }
  }

  SECTION("duplicate attribute names keep separate rows") {
    MspProgram m = compile_msp(parse_policy("A AND A"));
    REQUIRE(m.rows == 2);
    REQUIRE(m.labels == std::vector<std::string>{"A", "A"});
  }
}

TEST_CASE("decode_msp agrees with satisfies and recombines to e1",
          "[policy]") {
  const mpz_class p(1009);
  PolicyFormula f = parse_policy("(A AND B) OR (C AND D)");
  MspProgram m = compile_msp(f);

  auto plan = decode_msp(m, attrs({"A", "B"}), p);
  REQUIRE(plan.has_value());
  REQUIRE(recombines_to_e1(m, *plan, p));

  REQUIRE_FALSE(decode_msp(m, attrs({"A", "C"}), p).has_value());
  REQUIRE_FALSE(decode_msp(m, attrs({"E"}), p).has_value());

  SECTION("coefficients are nonzero and indices owned") {
    auto a = decode_msp(m, attrs({"A", "B", "C", "D"}), p);
    REQUIRE(a.has_value());
    AttributeSet owned = attrs({"A", "B", "C", "D"});
    for (std::size_t k = 0; k < a->indices.size(); ++k) {
      REQUIRE(owned.contains(m.labels[a->indices[k]]));
      REQUIRE_FALSE(a->coefficients[k].is_zero());
    }
  }

  SECTION("rows with zero coefficient are dropped") {
    // For A OR B holding both attributes, one row suffices.
    MspProgram orp = compile_msp(parse_policy("A OR B"));
    auto a = decode_msp(orp, attrs({"A", "B"}), p);
    REQUIRE(a.has_value());
    REQUIRE(a->indices.size() == 1);
  }

  SECTION("malformed program throws rather than deciding") {
    MspProgram broken = m;
    broken.labels.pop_back();
    REQUIRE_THROWS_AS(decode_msp(broken, attrs({"A"}), p), UsageError);
  }
}

TEST_CASE("decode_msp equivalence, exhaustive to 3 leaves", "[policy]") {
  const mpz_class p(1009);
  const std::vector<std::string> pool{"A", "B", "C", "D"};
  std::size_t checked = 0;
  for (std::size_t leaves = 1; leaves <= 3; ++leaves) {
    for (const PolicyFormula& f : all_formulas(pool, leaves)) {
      MspProgram m = compile_msp(f);
      for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < pool.size(); ++i) {
          if (mask & (1u << i)) names.push_back(pool[i]);
        }
        AttributeSet s(std::move(names));
        auto plan = decode_msp(m, s, p);
        REQUIRE(plan.has_value() == satisfies(f, s));
        if (plan) REQUIRE(recombines_to_e1(m, *plan, p));
        ++checked;
      }
    }
  }
  REQUIRE(checked == (4 + 32 + 512) * 16);
}

TEST_CASE("msp_equal_mod compares entries mod p", "[policy]") {
  const mpz_class p(1009);
  MspProgram a = compile_msp(parse_policy("A AND B"));
  MspProgram b = a;
  b.at(1, 1) = 1008;  // -1 mod 1009
  REQUIRE(msp_equal_mod(a, b, p));
  b.at(1, 1) = 2;
  REQUIRE_FALSE(msp_equal_mod(a, b, p));
  MspProgram c = a;
  c.labels[0] = "X";
  REQUIRE_FALSE(msp_equal_mod(a, c, p));
}

TEST_CASE("roster parsing and r-anonymity counting", "[policy]") {
  const char* text =
      "alice: doctor, cardiology\n"
      "bob: doctor\n"
      "# staff below\n"
      "\n"
      "carol: nurse,ward:icu\n"
      "dave: doctor,cardiology\n";
  Roster roster = parse_roster(text);
  REQUIRE(roster.users.size() == 4);
  REQUIRE(roster.users[0].first == "alice");
  REQUIRE(roster.users[2].second.contains("ward:icu"));

  PolicyFormula f = parse_policy("doctor AND cardiology");
  REQUIRE(count_satisfying(f, roster) == 2);
  REQUIRE(verify_r_anonymity(f, roster, 1));
  REQUIRE(verify_r_anonymity(f, roster, 2));
  REQUIRE_FALSE(verify_r_anonymity(f, roster, 3));

  SECTION("r must be at least 1") {
    REQUIRE_THROWS_AS(verify_r_anonymity(f, roster, 0), UsageError);
  }

  SECTION("span-program overload agrees with the formula overload") {
    const mpz_class p(1009);
    MspProgram m = compile_msp(f);
    REQUIRE(count_satisfying(m, roster, p) == 2);
    REQUIRE(verify_r_anonymity(m, roster, 2, p));
    REQUIRE_FALSE(verify_r_anonymity(m, roster, 3, p));
  }

  SECTION("duplicate user ids are rejected") {
    REQUIRE_THROWS_AS(parse_roster("a: x\na: y\n"), UsageError);
  }

  SECTION("missing separator is rejected") {
    REQUIRE_THROWS_AS(parse_roster("alice doctor\n"), UsageError);
  }
}
