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
// Key-generation authority: owns the master key pair, issues attribute
// keys, and maintains the attribute revocation list. Revocation here
// is by refusal: revoked attributes are never issued again and servers
// refuse policies naming them, but keys issued earlier keep working
// until the authority rotates the master key pair.

#ifndef ABKA_AUTHORITY_HPP
#define ABKA_AUTHORITY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "abka/abkem.hpp"
#include "abka/arl.hpp"
#include "abka/errors.hpp"
#include "abka/rng.hpp"

namespace abka {

struct AuthorityState {
  SystemParams params;
  MasterKeyPair keys;
  std::uint64_t issued = 0;
  AttributeRevocationList arl;
};

inline AuthorityState authority_init(std::shared_ptr<Suite> suite, Rng& rng) {
  AuthorityState st;
  st.params = make_params(std::move(suite));
  st.keys = setup(st.params, rng);
  const Suite& s = *st.params.suite;
  // e(msk, g2) = e(g1, g2)^a must match the public key before anything
  // is issued under it.
  GroupElement check =
      s.pairing(st.keys.msk.msk, s.generator(GroupTag::g2));
  if (!s.equal(check, st.keys.mpk.mpk2)) {
    throw UsageError("master key consistency check failed");
  }
  return st;
}

inline AttributeSecretKey authority_issue(AuthorityState& st,
                                          const AttributeSet& attrs,
                                          Rng& rng) {
  std::string revoked = st.arl.first_revoked_of(attrs);
  if (!revoked.empty()) {
    throw UsageError("attribute is revoked: " + revoked);
  }
  AttributeSecretKey key =
      keygen(st.params, st.keys.mpk, st.keys.msk, attrs, rng);
  ++st.issued;
  return key;
}

// Bumps the list version even when the attribute was already revoked,
// so clients can tell the list changed hands.
inline const AttributeRevocationList& authority_revoke(
    AuthorityState& st, const std::string& attr) {
  st.arl.revoke(attr);
  return st.arl;
}

// Naive rotation: a fresh master key pair invalidates every previously
// issued key (their confirmations stop verifying against the new mpk).
// The revocation list and issue counter survive.
inline void authority_rotate(AuthorityState& st, Rng& rng) {
  st.keys = setup(st.params, rng);
}

}  // namespace abka

#endif  // ABKA_AUTHORITY_HPP
