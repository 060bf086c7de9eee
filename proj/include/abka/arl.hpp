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

#ifndef ABKA_ARL_HPP
#define ABKA_ARL_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "abka/errors.hpp"
#include "abka/policy.hpp"

namespace abka {

// Versioned list of revoked attributes. Every mutation bumps the
// version, including re-revoking an already-listed attribute, so
// holders can order any two lists from the same lineage.
struct AttributeRevocationList {
  std::uint32_t version = 0;
  std::vector<std::string> revoked;  // sorted, unique

  bool is_revoked(const std::string& attr) const {
    return std::binary_search(revoked.begin(), revoked.end(), attr);
  }

  void revoke(const std::string& attr) {
    if (attr.empty()) throw UsageError("attribute name must be non-empty");
    auto it = std::lower_bound(revoked.begin(), revoked.end(), attr);
    if (it == revoked.end() || *it != attr) revoked.insert(it, attr);
    ++version;
  }

  // First revoked attribute found in `attrs`, or empty string.
  std::string first_revoked_of(const AttributeSet& attrs) const {
    for (const std::string& a : attrs.names()) {
      if (is_revoked(a)) return a;
    }
    return {};
  }

  bool operator==(const AttributeRevocationList&) const = default;
};

}  // namespace abka

#endif  // ABKA_ARL_HPP
