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
// Shared test scaffolding: scripted randomness, deterministic fuzz
// bytes, and policy-formula generators.

#ifndef ABKA_TESTS_HELPERS_HPP
#define ABKA_TESTS_HELPERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "abka/abka.hpp"

namespace abka::testing {

// Returns scripted values for the first uniform_scalar calls, then
// falls back to the system rng. fill() stays random so session ids and
// seeds remain unique.
class ScriptedRng final : public Rng {
 public:
  explicit ScriptedRng(std::vector<unsigned long> script)
      : script_(std::move(script)) {}

  void fill(std::span<std::uint8_t> out) override { fallback_.fill(out); }

  Scalar uniform_scalar(const mpz_class& modulus) override {
    if (pos_ < script_.size()) {
      mpz_class v(static_cast<unsigned long>(script_[pos_++]));
      return Scalar(mod(v, modulus));
    }
    return fallback_.uniform_scalar(modulus);
  }

  std::size_t consumed() const { return pos_; }

 private:
  std::vector<unsigned long> script_;
  std::size_t pos_ = 0;
  SystemRng fallback_;
};

// Deterministic test rng (splitmix64): reproducible fuzz cases without
// seeding games.
class TestRand {
 public:
  explicit TestRand(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  bool flip() { return next() & 1; }

  std::uint8_t byte() { return static_cast<std::uint8_t>(next()); }

 private:
  std::uint64_t state_;
};

// Deterministic Rng over TestRand, for reproducible protocol runs.
class DeterministicRng final : public Rng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : rand_(seed) {}

  void fill(std::span<std::uint8_t> out) override {
    for (auto& b : out) b = rand_.byte();
  }

 private:
  TestRand rand_;
};

// Random formula with exactly `leaves` leaves over the given pool.
inline PolicyFormula random_formula(TestRand& rand,
                                    const std::vector<std::string>& pool,
                                    std::size_t leaves) {
  if (leaves == 1) {
    return PolicyFormula::attribute(pool[rand.below(pool.size())]);
  }
  std::size_t left = 1 + rand.below(leaves - 1);
  PolicyFormula l = random_formula(rand, pool, left);
  PolicyFormula r = random_formula(rand, pool, leaves - left);
  return rand.flip() ? PolicyFormula::and_gate(l, r)
                     : PolicyFormula::or_gate(l, r);
}

// A satisfying attribute set built by walking the tree: both children
// of an AND, one random child of an OR.
inline void collect_satisfying(const PolicyFormula::Node& node,
                               TestRand& rand,
                               std::vector<std::string>& out) {
  switch (node.kind) {
    case PolicyFormula::Kind::attribute:
      out.push_back(node.attribute);
      return;
    case PolicyFormula::Kind::and_gate:
      collect_satisfying(*node.left, rand, out);
      collect_satisfying(*node.right, rand, out);
      return;
    case PolicyFormula::Kind::or_gate:
      collect_satisfying(rand.flip() ? *node.left : *node.right, rand, out);
      return;
  }
}

inline AttributeSet pick_satisfying(const PolicyFormula& f, TestRand& rand) {
  std::vector<std::string> names;
  collect_satisfying(f.root(), rand, names);
  return AttributeSet(std::move(names));
}

// Every formula with exactly `leaves` leaves over `pool`, all tree
// shapes, gate choices, and leaf labelings.
inline std::vector<PolicyFormula> all_formulas(
    const std::vector<std::string>& pool, std::size_t leaves) {
  if (leaves == 1) {
    std::vector<PolicyFormula> out;
    for (const std::string& a : pool) {
      out.push_back(PolicyFormula::attribute(a));
    }
    return out;
  }
  std::vector<PolicyFormula> out;
  for (std::size_t left = 1; left < leaves; ++left) {
    std::vector<PolicyFormula> ls = all_formulas(pool, left);
    std::vector<PolicyFormula> rs = all_formulas(pool, leaves - left);
    for (const PolicyFormula& l : ls) {
      for (const PolicyFormula& r : rs) {
        out.push_back(PolicyFormula::and_gate(l, r));
        out.push_back(PolicyFormula::or_gate(l, r));
      }
    }
  }
  return out;
}

}  // namespace abka::testing

#endif  // ABKA_TESTS_HELPERS_HPP
