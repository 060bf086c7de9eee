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
// Minimal end-to-end handshake over the in-process loopback transport:
// an authority issues one attribute key, a server challenges under a
// policy, and the client authenticates anonymously.

#include <cstdio>
#include <thread>

#include "abka/abka.hpp"

using namespace abka;

// First 8 hex chars of SHA-256(K_d): comparable by eye, reveals
// nothing useful about the key.
static std::string key_fingerprint(const Digest32& kd) {
  Digest32 d = sha256(ByteSpan(kd.data(), kd.size()));
  return to_hex(ByteSpan(d.data(), d.size())).substr(0, 8);
}

int main() {
  SystemRng rng;

  // Authority: master keys plus one credential for {doctor, cardiology}.
  AuthorityState authority = authority_init(make_suite("mock"), rng);
  AttributeSecretKey sk =
      authority_issue(authority, AttributeSet({"doctor", "cardiology"}), rng);

  // Server: any holder of doctor AND cardiology may open a session.
  ServerConfig cfg(authority.params, authority.keys.mpk,
                   parse_policy("doctor AND cardiology"), "demo.abka",
                   /*require_confirmation=*/false, authority.arl);

  ClientCredentials creds{authority.params, authority.keys.mpk, sk,
                          std::nullopt, authority.arl};

  LoopbackPair pair;
  AuthResult server_result;
  std::thread server([&] {
    SystemRng server_rng;
    server_result = run_server_handshake(pair.a(), cfg, server_rng);
  });
  ClientResult client_result =
      run_client_handshake(pair.b(), creds, std::nullopt, rng,
                           /*with_confirmation=*/false);
  server.join();

  std::printf("server: %s\n",
              server_result.accepted ? "accepted" : "rejected");
  std::printf("client: %s\n",
              client_result.accepted ? "accepted" : "rejected");
  if (!server_result.accepted || !client_result.accepted) return 1;

  // Both sides hold the same derived key; show fingerprints only.
  std::printf("server key fingerprint: %s\n",
              key_fingerprint(server_result.keys->key()).c_str());
  std::printf("client key fingerprint: %s\n",
              key_fingerprint(client_result.keys->key()).c_str());
  const bool match =
      server_result.keys->key() == client_result.keys->key();
  std::printf("session keys %s\n", match ? "match" : "differ");
  return match ? 0 : 1;
}
