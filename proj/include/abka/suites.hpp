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

#ifndef ABKA_SUITES_HPP
#define ABKA_SUITES_HPP

#include <memory>
#include <string>

#include "abka/bls381_suite.hpp"
#include "abka/errors.hpp"
#include "abka/mock_suite.hpp"

namespace abka {

inline std::shared_ptr<Suite> make_suite(std::uint8_t suite_id) {
  switch (suite_id) {
    case MockSuite::kSuiteId: return std::make_shared<MockSuite>();
    case Bls381Suite::kSuiteId: return std::make_shared<Bls381Suite>();
    default: throw UsageError("unknown suite id");
  }
}

inline std::shared_ptr<Suite> make_suite(const std::string& name) {
  if (name == "mock") return std::make_shared<MockSuite>();
  if (name == "bls12-381" || name == "bls381") {
    return std::make_shared<Bls381Suite>();
  }
  throw UsageError("unknown suite: " + name);
}

}  // namespace abka

#endif  // ABKA_SUITES_HPP
