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
// Single-round anonymous authentication. The server encapsulates a
// partial key K = mpk2^s under its access policy and keeps s; a client
// whose attributes satisfy the policy decapsulates K, picks an
// ephemeral b_eph, and sends B = mpk2^b_eph. Both ends then share
// K_DH = K^b_eph = B^s and derive session keys from it plus the full
// transcript. The optional confirmation tag proves the client really
// decapsulated. Authentication is of the user to the server only;
// authenticating the server is the transport's job.

#ifndef ABKA_PROTOCOL_HPP
#define ABKA_PROTOCOL_HPP

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "abka/abkem.hpp"
#include "abka/arl.hpp"
#include "abka/errors.hpp"
#include "abka/hash.hpp"
#include "abka/messages.hpp"
#include "abka/policy.hpp"
#include "abka/transport.hpp"
#include "abka/wire.hpp"

namespace abka {

// Session keys derived by the KDF. Move-only; the backing bytes are
// zeroized on destruction, explicit wipe, and move-from.
class SessionKeys {
 public:
  SessionKeys(const Digest32& kd, const Digest32& kmac)
      : kd_(kd), kmac_(kmac), live_(true) {}

  SessionKeys(const SessionKeys&) = delete;
  SessionKeys& operator=(const SessionKeys&) = delete;

  SessionKeys(SessionKeys&& o) noexcept
      : kd_(o.kd_), kmac_(o.kmac_), live_(o.live_) {
    o.wipe();
  }
  SessionKeys& operator=(SessionKeys&& o) noexcept {
    if (this != &o) {
      wipe();
      kd_ = o.kd_;
      kmac_ = o.kmac_;
      live_ = o.live_;
      o.wipe();
    }
    return *this;
  }

  ~SessionKeys() { wipe(); }

  const Digest32& key() const {
    if (!live_) throw UsageError("session keys already wiped");
    return kd_;
  }

  const Digest32& mac_key() const {
    if (!live_) throw UsageError("session keys already wiped");
    return kmac_;
  }

  void wipe() {
    secure_wipe(kd_);
    secure_wipe(kmac_);
    live_ = false;
  }

  bool wiped() const { return !live_; }

 private:
  Digest32 kd_;
  Digest32 kmac_;
  bool live_;
};

// KDF context: canonical Challenge bytes, then the client partial key,
// then the service identity. Both handshake variants derive from the
// same bytes, and the confirmation tag covers exactly these too.
inline Bytes auth_context(ByteSpan challenge_bytes, const Suite& suite,
                          const GroupElement& b, const std::string& id_sp) {
  Bytes ctx(challenge_bytes.begin(), challenge_bytes.end());
  append(ctx, suite.encode(b));
  append(ctx, as_bytes(id_sp));
  return ctx;
}

// Extract-then-expand: prk = HMAC(salt, encode(K_DH)); K_d and k_mac
// are one expansion step each, split by a trailing domain byte.
inline SessionKeys kdf(const Suite& suite, const GroupElement& k_dh,
                       ByteSpan context) {
  Bytes ikm = suite.encode(k_dh);
  Digest32 prk = hmac_sha256(as_bytes("ABKEM-AUTH-v1"), ikm);
  secure_wipe(ikm);
  Bytes msg(context.begin(), context.end());
  msg.push_back(0x01);
  Digest32 kd = hmac_sha256(ByteSpan(prk.data(), prk.size()), msg);
  msg.back() = 0x02;
  Digest32 kmac = hmac_sha256(ByteSpan(prk.data(), prk.size()), msg);
  secure_wipe(prk);
  secure_wipe(msg);
  SessionKeys keys(kd, kmac);
  secure_wipe(kd);
  secure_wipe(kmac);
  return keys;
}

inline Digest32 mac_tag(const Digest32& key, ByteSpan data) {
  return hmac_sha256(ByteSpan(key.data(), key.size()), data);
}

inline bool mac_verify(const Digest32& key, ByteSpan data, ByteSpan tag) {
  Digest32 expect = mac_tag(key, data);
  bool ok = ct_equal(ByteSpan(expect.data(), expect.size()), tag);
  secure_wipe(expect);
  return ok;
}

struct ServerConfig {
  SystemParams params;
  MasterPublicKey mpk;
  PolicyFormula policy;
  MspProgram msp;
  std::string id_sp;
  bool require_confirmation = false;
  AttributeRevocationList arl;
  std::chrono::seconds session_timeout{120};

  ServerConfig(SystemParams params_in, MasterPublicKey mpk_in,
               PolicyFormula policy_in, std::string id_sp_in,
               bool require_confirmation_in = false,
               AttributeRevocationList arl_in = {})
      : params(std::move(params_in)),
        mpk(std::move(mpk_in)),
        policy(std::move(policy_in)),
        msp(compile_msp(policy)),
        id_sp(std::move(id_sp_in)),
        require_confirmation(require_confirmation_in),
        arl(std::move(arl_in)) {
    if (id_sp.empty()) throw UsageError("id_sp must be non-empty");
  }
};

struct ClientCredentials {
  SystemParams params;
  MasterPublicKey mpk;
  AttributeSecretKey sk;
  std::optional<std::size_t> min_anonymity_r;
  // Local copy of the revocation list, when the client has one. Used
  // to refuse runs with revoked attributes and to detect that the
  // server advertises a newer list than we hold.
  std::optional<AttributeRevocationList> arl;
};

struct AuthResult {
  bool accepted = false;
  std::string reason;
  std::optional<SessionKeys> keys;
};

// Server-side ephemeral state for one handshake. Single-use: finish or
// expiry consumes it and wipes s. There is deliberately no accessor
// for s.
class ServerSession {
 public:
  ServerSession(const SessionId& id, Scalar s, Bytes transcript,
                std::chrono::steady_clock::time_point created_at)
      : id_(id),
        s_(std::move(s)),
        transcript_(std::move(transcript)),
        created_at_(created_at) {}

  ServerSession(ServerSession&&) = default;
  ServerSession& operator=(ServerSession&&) = default;

  ~ServerSession() { wipe_scalar(s_); }

  const SessionId& id() const { return id_; }
  const Bytes& transcript() const { return transcript_; }
  std::chrono::steady_clock::time_point created_at() const {
    return created_at_;
  }
  bool finished() const { return finished_; }

  bool expired(std::chrono::steady_clock::time_point now,
               std::chrono::seconds timeout) const {
    return now - created_at_ >= timeout;
  }

  void expire() {
    wipe_scalar(s_);
    finished_ = true;
  }

  // Consumes the session whatever the outcome; s does not survive
  // this call.
  AuthResult finish(const ServerConfig& cfg, const Response& resp) {
    if (finished_) return reject("replay");
    finished_ = true;
    struct Wiper {
      Scalar& s;
      ~Wiper() { wipe_scalar(s); }
    } wiper{s_};

    const Suite& suite = *cfg.params.suite;
    if (resp.session_id != id_) return reject("unknown session");
    if (resp.suite_id != suite.id()) return reject("suite mismatch");
    if (resp.b.empty() || resp.b.tag() != GroupTag::gt) {
      return reject("malformed response");
    }
    if (suite.is_identity(resp.b)) return reject("degenerate key");

    GroupElement k_dh = suite.exp(resp.b, s_);
    Bytes context = auth_context(transcript_, suite, resp.b, cfg.id_sp);
    SessionKeys keys = kdf(suite, k_dh, context);

    if (cfg.require_confirmation && !resp.has_mac) {
      return reject("missing confirmation");
    }
    if (resp.has_mac &&
        !mac_verify(keys.mac_key(), context,
                    ByteSpan(resp.mac.data(), resp.mac.size()))) {
      return reject("bad confirmation");
    }

    AuthResult result;
    result.accepted = true;
    result.keys = std::move(keys);
    return result;
  }

 private:
  static AuthResult reject(std::string reason) {
    AuthResult r;
    r.accepted = false;
    r.reason = std::move(reason);
    return r;
  }

  SessionId id_;
  Scalar s_;
  Bytes transcript_;
  std::chrono::steady_clock::time_point created_at_;
  bool finished_ = false;
};

inline std::pair<Challenge, ServerSession> server_begin(
    const ServerConfig& cfg, Rng& rng) {
  const Suite& suite = *cfg.params.suite;
  // A policy naming a revoked attribute must not be served at all.
  for (const std::string& attr : cfg.policy.attributes()) {
    if (cfg.arl.is_revoked(attr)) {
      throw AuthRefusal(AuthRefusal::Kind::revoked_attribute,
                        "policy names revoked attribute: " + attr);
    }
  }

  Challenge ch;
  ch.suite_id = suite.id();
  rng.fill(ch.session_id);
  ch.arl_version = cfg.arl.version;
  ch.id_sp = cfg.id_sp;
  ch.msp = cfg.msp;

  EncapSeed seed = random_seed(rng);
  EncapResult enc = key_encap_star(cfg.params, cfg.mpk, cfg.msp, seed);
  secure_wipe(seed.bytes);
  ch.encap = std::move(enc.encap);
  // K itself is not kept: B^s reproduces it when the response arrives.

  Bytes transcript = encode_challenge(suite, ch);
  ServerSession session(ch.session_id, std::move(enc.s),
                        std::move(transcript),
                        std::chrono::steady_clock::now());
  return {std::move(ch), std::move(session)};
}

inline std::pair<Response, SessionKeys> client_respond(
    const ClientCredentials& creds, const Challenge& ch,
    const std::optional<Roster>& roster, Rng& rng, bool with_confirmation) {
  const Suite& suite = *creds.params.suite;
  if (ch.suite_id != suite.id()) {
    throw ProtocolError("challenge from a different suite");
  }
  if (!ch.msp.well_formed() || ch.encap.c.size() != ch.msp.rows) {
    throw ProtocolError("malformed challenge");
  }

  if (creds.arl) {
    if (creds.arl->version < ch.arl_version) {
      throw AuthRefusal(AuthRefusal::Kind::stale_revocation_list,
                        "server advertises revocation list v" +
                            std::to_string(ch.arl_version) +
                            ", local copy is v" +
                            std::to_string(creds.arl->version));
    }
    std::string revoked = creds.arl->first_revoked_of(creds.sk.attrs);
    if (!revoked.empty()) {
      throw AuthRefusal(AuthRefusal::Kind::revoked_attribute,
                        "attribute is revoked: " + revoked);
    }
  }

  if (creds.min_anonymity_r && roster) {
    const std::size_t count =
        count_satisfying(ch.msp, *roster, suite.order());
    if (count < *creds.min_anonymity_r) {
      throw AuthRefusal(AuthRefusal::Kind::anonymity,
                        "policy satisfied by " + std::to_string(count) +
                            " roster user(s), need " +
                            std::to_string(*creds.min_anonymity_r));
    }
  }

  std::optional<GroupElement> k =
      key_decap(creds.params, creds.sk, ch.msp, ch.encap);
  if (!k) {
    throw AuthRefusal(AuthRefusal::Kind::policy_not_satisfied,
                      "attributes do not satisfy policy");
  }

  Scalar b_eph = rng.uniform_nonzero_scalar(suite.order());
  GroupElement b = suite.exp(creds.mpk.mpk2, b_eph);
  GroupElement k_dh = suite.exp(*k, b_eph);
  wipe_scalar(b_eph);

  Bytes transcript = encode_challenge(suite, ch);
  Bytes context = auth_context(transcript, suite, b, ch.id_sp);
  SessionKeys keys = kdf(suite, k_dh, context);

  Response resp;
  resp.suite_id = suite.id();
  resp.session_id = ch.session_id;
  resp.b = std::move(b);
  if (with_confirmation) {
    resp.has_mac = true;
    resp.mac = mac_tag(keys.mac_key(), context);
  }
  return {std::move(resp), std::move(keys)};
}

// Pending sessions keyed by id; finish/expiry is serialized per store.
class SessionStore {
 public:
  explicit SessionStore(
      std::chrono::seconds timeout = std::chrono::seconds(120))
      : timeout_(timeout) {}

  void put(ServerSession session) {
    std::lock_guard<std::mutex> lock(mu_);
    SessionId id = session.id();
    sessions_.insert_or_assign(id, std::move(session));
  }

  // Removes and returns the session, or nullopt when unknown or
  // expired (expired sessions are wiped and dropped).
  std::optional<ServerSession> take(const SessionId& id) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) return std::nullopt;
    ServerSession session = std::move(it->second);
    sessions_.erase(it);
    if (session.expired(std::chrono::steady_clock::now(), timeout_)) {
      session.expire();
      return std::nullopt;
    }
    return session;
  }

  void sweep() {
    std::lock_guard<std::mutex> lock(mu_);
    const auto now = std::chrono::steady_clock::now();
    for (auto it = sessions_.begin(); it != sessions_.end();) {
      if (it->second.expired(now, timeout_)) {
        it->second.expire();
        it = sessions_.erase(it);
      } else {
        ++it;
      }
    }
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return sessions_.size();
  }

 private:
  mutable std::mutex mu_;
  std::chrono::seconds timeout_;
  std::map<SessionId, ServerSession> sessions_;
};

// ------------------------------------------------ transport drivers --

// Serves one handshake on an accepted connection: Hello in, Challenge
// out, Response in, Result out. Malformed client traffic is answered
// with a rejection Result rather than a dropped connection.
inline AuthResult run_server_handshake(Transport& t, const ServerConfig& cfg,
                                       Rng& rng) {
  Frame hello = t.recv();
  if (hello.type != FrameType::hello) {
    throw ProtocolError("expected hello frame");
  }
  auto [ch, session] = server_begin(cfg, rng);
  t.send(FrameType::challenge, encode_challenge(*cfg.params.suite, ch));

  AuthResult result;
  try {
    Frame rf = t.recv();
    if (rf.type != FrameType::response) {
      throw ProtocolError("expected response frame");
    }
    Response resp = decode_response(*cfg.params.suite, rf.payload);
    result = session.finish(cfg, resp);
  } catch (const WireError& e) {
    session.expire();
    result.accepted = false;
    result.reason = std::string("malformed response: ") + e.what();
  }
  ResultMsg msg;
  msg.session_id = session.id();
  msg.accepted = result.accepted;
  msg.reason = result.reason;
  t.send(FrameType::result, encode_result(msg));
  return result;
}

struct ClientResult {
  bool accepted = false;   // the server's verdict
  std::string reason;
  std::optional<SessionKeys> keys;  // locally derived session keys
};

// Runs the client side end to end. Local refusals (policy, anonymity,
// revocation) surface as AuthRefusal before anything beyond Hello is
// sent.
inline ClientResult run_client_handshake(Transport& t,
                                         const ClientCredentials& creds,
                                         const std::optional<Roster>& roster,
                                         Rng& rng, bool with_confirmation) {
  t.send(FrameType::hello, ByteSpan());
  Frame cf = t.recv();
  if (cf.type != FrameType::challenge) {
    throw ProtocolError("expected challenge frame");
  }
  Challenge ch = decode_challenge(*creds.params.suite, cf.payload);
  auto [resp, keys] =
      client_respond(creds, ch, roster, rng, with_confirmation);
  t.send(FrameType::response, encode_response(*creds.params.suite, resp));

  Frame rf = t.recv();
  if (rf.type != FrameType::result) {
    throw ProtocolError("expected result frame");
  }
  ResultMsg res = decode_result(rf.payload);
  ClientResult out;
  out.accepted = res.accepted;
  out.reason = res.reason;
  out.keys = std::move(keys);
  return out;
}

}  // namespace abka

#endif  // ABKA_PROTOCOL_HPP
