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
// Key confirmation: the client proves possession of the derived session
// key with a MAC over the transcript, so the server learns pass/fail
// during the handshake instead of on first use. A flipped MAC byte and
// a client whose attributes miss the policy are both turned away.

#include <cstdio>

#include "abka/abka.hpp"

using namespace abka;

int main() {
  SystemRng rng;
  AuthorityState authority = authority_init(make_suite("mock"), rng);
  AttributeSecretKey good =
      authority_issue(authority, AttributeSet({"doctor", "cardiology"}), rng);

  ServerConfig cfg(authority.params, authority.keys.mpk,
                   parse_policy("doctor AND cardiology"), "demo.abka",
                   /*require_confirmation=*/true, authority.arl);

  // Round 1: honest client, confirmation verifies.
  {
    ClientCredentials creds{authority.params, authority.keys.mpk, good,
                            std::nullopt, authority.arl};
    auto [challenge, session] = server_begin(cfg, rng);
    auto [response, keys] =
        client_respond(creds, challenge, std::nullopt, rng,
                       /*with_confirmation=*/true);
    AuthResult verdict = session.finish(cfg, response);
    std::printf("honest client:   %s\n",
                verdict.accepted ? "accepted" : verdict.reason.c_str());
    if (!verdict.accepted) return 1;
  }

  // Round 2: same key, but the confirmation tag is corrupted in
  // flight. The response still decapsulates; the MAC gives it away.
  {
    ClientCredentials creds{authority.params, authority.keys.mpk, good,
                            std::nullopt, authority.arl};
    auto [challenge, session] = server_begin(cfg, rng);
    auto [response, keys] =
        client_respond(creds, challenge, std::nullopt, rng, true);
    response.mac[0] ^= 0x01;
    AuthResult verdict = session.finish(cfg, response);
    std::printf("tampered tag:    rejected (%s)\n", verdict.reason.c_str());
    if (verdict.accepted) return 1;
  }

  // Round 3: a key for a different attribute set. The client-side
  // guard notices the policy cannot be satisfied and never responds.
  {
    AttributeSecretKey weak =
        authority_issue(authority, AttributeSet({"cardiology"}), rng);
    ClientCredentials creds{authority.params, authority.keys.mpk, weak,
                            std::nullopt, authority.arl};
    auto [challenge, session] = server_begin(cfg, rng);
    try {
      client_respond(creds, challenge, std::nullopt, rng, true);
      std::printf("weak key:        responded (unexpected)\n");
      return 1;
    } catch (const AuthRefusal& e) {
      session.expire();
      std::printf("weak key:        refused locally (%s)\n", e.what());
    }
  }
  return 0;
}
