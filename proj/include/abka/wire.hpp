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
// Binary formats for every key, message, and file this library emits.
// All integers are big-endian; group elements use the suite's
// fixed-length canonical encoding; scalars are fixed-length big-endian
// sized by the group order. Every encoder is canonical (one byte string
// per value) and every decoder rejects anything else. Layouts are
// documented in docs/wire-format.md; changes there and here must stay
// in lock step.

#ifndef ABKA_WIRE_HPP
#define ABKA_WIRE_HPP

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "abka/abkem.hpp"
#include "abka/arl.hpp"
#include "abka/bytes.hpp"
#include "abka/errors.hpp"
#include "abka/messages.hpp"
#include "abka/mock_suite.hpp"
#include "abka/policy.hpp"
#include "abka/suites.hpp"

namespace abka {

inline constexpr char kMagic[4] = {'A', 'B', 'K', '1'};
inline constexpr std::size_t kMaxFramePayload = 1u << 20;

enum class FrameType : std::uint8_t {
  challenge = 0x01,
  response = 0x02,
  result = 0x03,
  hello = 0x04,
};

enum class KeyFileKind : std::uint8_t {
  params = 0x10,
  mpk = 0x11,
  msk = 0x12,
  sk = 0x13,
  arl = 0x14,
};

inline FrameType frame_type_from_byte(std::uint8_t b) {
  switch (b) {
    case 0x01: return FrameType::challenge;
    case 0x02: return FrameType::response;
    case 0x03: return FrameType::result;
    case 0x04: return FrameType::hello;
  }
  throw WireError("unknown frame type");
}

// Bounds-checked big-endian reader; every decoder below consumes
// through one of these, so truncated or oversized input turns into a
// WireError instead of an out-of-bounds read.
class ByteReader {
 public:
  explicit ByteReader(ByteSpan data) : data_(data) {}

  std::size_t remaining() const { return data_.size() - pos_; }

  ByteSpan take(std::size_t n) {
    if (remaining() < n) throw WireError("truncated input");
    ByteSpan out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::uint8_t u8() { return take(1)[0]; }

  std::uint16_t u16() {
    ByteSpan b = take(2);
    return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
  }

  std::uint32_t u32() {
    ByteSpan b = take(4);
    return (static_cast<std::uint32_t>(b[0]) << 24) |
           (static_cast<std::uint32_t>(b[1]) << 16) |
           (static_cast<std::uint32_t>(b[2]) << 8) |
           static_cast<std::uint32_t>(b[3]);
  }

  std::uint64_t u64() { return read_u64_be(take(8)); }

  std::string str16() {
    std::uint16_t len = u16();
    ByteSpan b = take(len);
    return std::string(reinterpret_cast<const char*>(b.data()), b.size());
  }

  void expect_done() const {
    if (pos_ != data_.size()) throw WireError("trailing bytes");
  }

 private:
  ByteSpan data_;
  std::size_t pos_ = 0;
};

inline void append_str16(Bytes& out, const std::string& s) {
  if (s.size() > 0xffff) throw WireError("string too long for u16 length");
  append_u16(out, static_cast<std::uint16_t>(s.size()));
  append(out, as_bytes(s));
}

// ------------------------------------------------------------- MSP --

// n:u32, m:u32, n*m scalars (fixed width, reduced mod p), n labels.
inline void encode_msp_bytes(Bytes& out, const MspProgram& msp,
                             const mpz_class& p) {
  if (!msp.well_formed()) throw UsageError("malformed span program");
  append_u32(out, static_cast<std::uint32_t>(msp.rows));
  append_u32(out, static_cast<std::uint32_t>(msp.cols));
  const std::size_t width = byte_length(p);
  Bytes scratch(width);
  for (const mpz_class& e : msp.entries) {
    mpz_to_be(mod(e, p), scratch.data(), width);
    append(out, scratch);
  }
  for (const std::string& label : msp.labels) append_str16(out, label);
}

inline MspProgram decode_msp_bytes(ByteReader& r, const mpz_class& p) {
  MspProgram msp;
  msp.rows = r.u32();
  msp.cols = r.u32();
  if (msp.rows == 0 || msp.cols == 0) {
    throw WireError("span program must be non-empty");
  }
  const std::size_t width = byte_length(p);
  if (msp.rows > r.remaining() || msp.cols > r.remaining() ||
      msp.rows * msp.cols > r.remaining() / width + 1) {
    throw WireError("span program larger than input");
  }
  msp.entries.reserve(msp.rows * msp.cols);
  for (std::size_t i = 0; i < msp.rows * msp.cols; ++i) {
    mpz_class v = mpz_from_be(r.take(width));
    if (v >= p) throw WireError("span program scalar not reduced");
    msp.entries.push_back(std::move(v));
  }
  msp.labels.reserve(msp.rows);
  for (std::size_t i = 0; i < msp.rows; ++i) {
    std::string label = r.str16();
    if (label.empty()) throw WireError("empty row label");
    msp.labels.push_back(std::move(label));
  }
  return msp;
}

// --------------------------------------------------- encapsulation --

inline void encode_encapsulation(Bytes& out, const Suite& suite,
                                 const Encapsulation& e) {
  append_u32(out, static_cast<std::uint32_t>(e.c.size()));
  append(out, suite.encode(e.z));
  for (const auto& [c1, c2] : e.c) {
    append(out, suite.encode(c1));
    append(out, suite.encode(c2));
  }
}

inline Encapsulation decode_encapsulation(ByteReader& r, const Suite& suite) {
  Encapsulation e;
  const std::uint32_t n = r.u32();
  const std::size_t pair_size =
      suite.element_size(GroupTag::g1) + suite.element_size(GroupTag::g2);
  if (n > r.remaining() / pair_size + 1) {
    throw WireError("encapsulation larger than input");
  }
  e.z = suite.decode(GroupTag::g2, r.take(suite.element_size(GroupTag::g2)));
  e.c.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    GroupElement c1 =
        suite.decode(GroupTag::g1, r.take(suite.element_size(GroupTag::g1)));
    GroupElement c2 =
        suite.decode(GroupTag::g2, r.take(suite.element_size(GroupTag::g2)));
    e.c.emplace_back(std::move(c1), std::move(c2));
  }
  return e;
}

// -------------------------------------------------------- messages --

inline Bytes encode_challenge(const Suite& suite, const Challenge& ch) {
  if (ch.suite_id != suite.id()) throw UsageError("suite mismatch");
  Bytes out;
  append_u8(out, ch.suite_id);
  append(out, ByteSpan(ch.session_id.data(), ch.session_id.size()));
  append_u32(out, ch.arl_version);
  append_str16(out, ch.id_sp);
  encode_msp_bytes(out, ch.msp, suite.order());
  encode_encapsulation(out, suite, ch.encap);
  return out;
}

inline Challenge decode_challenge(const Suite& suite, ByteSpan payload) {
  ByteReader r(payload);
  Challenge ch;
  ch.suite_id = r.u8();
  if (ch.suite_id != suite.id()) throw WireError("suite mismatch");
  ByteSpan sid = r.take(16);
  std::copy(sid.begin(), sid.end(), ch.session_id.begin());
  ch.arl_version = r.u32();
  ch.id_sp = r.str16();
  ch.msp = decode_msp_bytes(r, suite.order());
  ch.encap = decode_encapsulation(r, suite);
  r.expect_done();
  if (ch.encap.c.size() != ch.msp.rows) {
    throw WireError("encapsulation does not match span program shape");
  }
  return ch;
}

inline Bytes encode_response(const Suite& suite, const Response& resp) {
  if (resp.suite_id != suite.id()) throw UsageError("suite mismatch");
  Bytes out;
  append_u8(out, resp.suite_id);
  append(out, ByteSpan(resp.session_id.data(), resp.session_id.size()));
  append(out, suite.encode(resp.b));
  append_u8(out, resp.has_mac ? 0x01 : 0x00);
  if (resp.has_mac) {
    append(out, ByteSpan(resp.mac.data(), resp.mac.size()));
  }
  return out;
}

inline Response decode_response(const Suite& suite, ByteSpan payload) {
  ByteReader r(payload);
  Response resp;
  resp.suite_id = r.u8();
  if (resp.suite_id != suite.id()) throw WireError("suite mismatch");
  ByteSpan sid = r.take(16);
  std::copy(sid.begin(), sid.end(), resp.session_id.begin());
  resp.b = suite.decode(GroupTag::gt, r.take(suite.element_size(GroupTag::gt)));
  const std::uint8_t flag = r.u8();
  if (flag > 1) throw WireError("invalid confirmation flag");
  resp.has_mac = flag == 1;
  if (resp.has_mac) {
    ByteSpan m = r.take(32);
    std::copy(m.begin(), m.end(), resp.mac.begin());
  }
  r.expect_done();
  return resp;
}

inline Bytes encode_result(const ResultMsg& res) {
  Bytes out;
  append(out, ByteSpan(res.session_id.data(), res.session_id.size()));
  append_u8(out, res.accepted ? 0x01 : 0x00);
  append_str16(out, res.reason);
  return out;
}

inline ResultMsg decode_result(ByteSpan payload) {
  ByteReader r(payload);
  ResultMsg res;
  ByteSpan sid = r.take(16);
  std::copy(sid.begin(), sid.end(), res.session_id.begin());
  const std::uint8_t flag = r.u8();
  if (flag > 1) throw WireError("invalid outcome flag");
  res.accepted = flag == 1;
  res.reason = r.str16();
  r.expect_done();
  return res;
}

// ------------------------------------------------------- key files --

inline Bytes encode_key_file(KeyFileKind kind, std::uint8_t suite_id,
                             ByteSpan body) {
  Bytes out;
  append(out, ByteSpan(reinterpret_cast<const std::uint8_t*>(kMagic), 4));
  append_u8(out, static_cast<std::uint8_t>(kind));
  append_u8(out, suite_id);
  append(out, body);
  return out;
}

struct KeyFileView {
  KeyFileKind kind;
  std::uint8_t suite_id;
  ByteSpan body;
};

inline KeyFileView parse_key_file(ByteSpan data) {
  if (data.size() < 6) throw WireError("key file too short");
  for (std::size_t i = 0; i < 4; ++i) {
    if (data[i] != static_cast<std::uint8_t>(kMagic[i])) {
      throw WireError("bad key file magic");
    }
  }
  const std::uint8_t kind = data[4];
  if (kind < 0x10 || kind > 0x14) throw WireError("unknown key file kind");
  return {static_cast<KeyFileKind>(kind), data[5], data.subspan(6)};
}

inline KeyFileView expect_key_file(ByteSpan data, KeyFileKind kind) {
  KeyFileView v = parse_key_file(data);
  if (v.kind != kind) throw WireError("unexpected key file kind");
  return v;
}

// params: u16 security level, plus the modulus for the mock suite.
inline Bytes encode_params_file(const SystemParams& params) {
  Bytes body;
  append_u16(body, static_cast<std::uint16_t>(params.security_k));
  if (params.suite->id() == MockSuite::kSuiteId) {
    const auto& mock = static_cast<const MockSuite&>(*params.suite);
    append_u64(body, mock.prime_u64());
  }
  return encode_key_file(KeyFileKind::params, params.suite->id(), body);
}

inline SystemParams decode_params_file(ByteSpan data) {
  KeyFileView v = expect_key_file(data, KeyFileKind::params);
  ByteReader r(v.body);
  const std::uint16_t k = r.u16();
  SystemParams params;
  if (v.suite_id == MockSuite::kSuiteId) {
    const std::uint64_t prime = r.u64();
    params.suite = std::make_shared<MockSuite>(prime);
  } else {
    params.suite = make_suite(v.suite_id);
  }
  r.expect_done();
  params.security_k = k;
  if (params.security_k != params.suite->security_level()) {
    throw WireError("security level does not match suite");
  }
  return params;
}

inline Bytes encode_mpk_file(const Suite& suite, const MasterPublicKey& mpk) {
  Bytes body;
  append(body, suite.encode(mpk.mpk1));
  append(body, suite.encode(mpk.mpk2));
  return encode_key_file(KeyFileKind::mpk, suite.id(), body);
}

inline MasterPublicKey decode_mpk_file(const Suite& suite, ByteSpan data) {
  KeyFileView v = expect_key_file(data, KeyFileKind::mpk);
  if (v.suite_id != suite.id()) throw WireError("suite mismatch");
  ByteReader r(v.body);
  MasterPublicKey mpk;
  mpk.mpk1 = suite.decode(GroupTag::g1, r.take(suite.element_size(GroupTag::g1)));
  mpk.mpk2 = suite.decode(GroupTag::gt, r.take(suite.element_size(GroupTag::gt)));
  r.expect_done();
  return mpk;
}

inline Bytes encode_msk_file(const Suite& suite, const MasterSecretKey& msk) {
  Bytes body;
  append(body, suite.encode(msk.msk));
  return encode_key_file(KeyFileKind::msk, suite.id(), body);
}

inline MasterSecretKey decode_msk_file(const Suite& suite, ByteSpan data) {
  KeyFileView v = expect_key_file(data, KeyFileKind::msk);
  if (v.suite_id != suite.id()) throw WireError("suite mismatch");
  ByteReader r(v.body);
  MasterSecretKey msk;
  msk.msk = suite.decode(GroupTag::g1, r.take(suite.element_size(GroupTag::g1)));
  r.expect_done();
  return msk;
}

// sk: t, t attribute names (sorted), x1, x2, t per-attribute keys.
inline Bytes encode_sk_file(const Suite& suite, const AttributeSecretKey& sk) {
  Bytes body;
  append_u32(body, static_cast<std::uint32_t>(sk.attrs.size()));
  for (const std::string& a : sk.attrs.names()) append_str16(body, a);
  append(body, suite.encode(sk.x1));
  append(body, suite.encode(sk.x2));
  for (const GroupElement& e : sk.sk) append(body, suite.encode(e));
  return encode_key_file(KeyFileKind::sk, suite.id(), body);
}

inline AttributeSecretKey decode_sk_file(const Suite& suite, ByteSpan data) {
  KeyFileView v = expect_key_file(data, KeyFileKind::sk);
  if (v.suite_id != suite.id()) throw WireError("suite mismatch");
  ByteReader r(v.body);
  const std::uint32_t t = r.u32();
  if (t == 0) throw WireError("attribute key without attributes");
  // A name takes at least 3 bytes (length prefix plus one character).
  if (t > r.remaining() / 3 + 1) {
    throw WireError("attribute key larger than input");
  }
  std::vector<std::string> names;
  names.reserve(t);
  for (std::uint32_t i = 0; i < t; ++i) {
    std::string name = r.str16();
    if (name.empty()) throw WireError("empty attribute name");
    if (!names.empty() && !(names.back() < name)) {
      throw WireError("attribute names not in canonical order");
    }
    names.push_back(std::move(name));
  }
  AttributeSecretKey sk;
  sk.attrs = AttributeSet(std::move(names));
  sk.x1 = suite.decode(GroupTag::g1, r.take(suite.element_size(GroupTag::g1)));
  sk.x2 = suite.decode(GroupTag::g2, r.take(suite.element_size(GroupTag::g2)));
  sk.sk.reserve(t);
  for (std::uint32_t i = 0; i < t; ++i) {
    sk.sk.push_back(
        suite.decode(GroupTag::g1, r.take(suite.element_size(GroupTag::g1))));
  }
  r.expect_done();
  return sk;
}

// arl: version, count, names (sorted). The suite byte is recorded but
// not meaningful: revocation is about attribute strings.
inline Bytes encode_arl_file(std::uint8_t suite_id,
                             const AttributeRevocationList& arl) {
  Bytes body;
  append_u32(body, arl.version);
  append_u32(body, static_cast<std::uint32_t>(arl.revoked.size()));
  for (const std::string& a : arl.revoked) append_str16(body, a);
  return encode_key_file(KeyFileKind::arl, suite_id, body);
}

inline AttributeRevocationList decode_arl_file(ByteSpan data) {
  KeyFileView v = expect_key_file(data, KeyFileKind::arl);
  ByteReader r(v.body);
  AttributeRevocationList arl;
  arl.version = r.u32();
  const std::uint32_t count = r.u32();
  if (count > r.remaining() / 3 + 1) {
    throw WireError("revocation list larger than input");
  }
  arl.revoked.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::string name = r.str16();
    if (name.empty()) throw WireError("empty attribute name");
    if (!arl.revoked.empty() && !(arl.revoked.back() < name)) {
      throw WireError("revoked attributes not in canonical order");
    }
    arl.revoked.push_back(std::move(name));
  }
  r.expect_done();
  return arl;
}

// ---------------------------------------------------------- frames --

inline Bytes encode_frame(FrameType type, ByteSpan payload) {
  if (payload.size() > kMaxFramePayload) throw WireError("frame too large");
  Bytes out;
  out.reserve(9 + payload.size());
  append(out, ByteSpan(reinterpret_cast<const std::uint8_t*>(kMagic), 4));
  append_u8(out, static_cast<std::uint8_t>(type));
  append_u32(out, static_cast<std::uint32_t>(payload.size()));
  append(out, payload);
  return out;
}

// --------------------------------------------------------- file IO --

inline void save_file(const std::string& path, ByteSpan data) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open for writing: " + path);
  f.write(reinterpret_cast<const char*>(data.data()),
          static_cast<std::streamsize>(data.size()));
  if (!f) throw UsageError("write failed: " + path);
}

inline Bytes load_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open: " + path);
  Bytes data((std::istreambuf_iterator<char>(f)),
             std::istreambuf_iterator<char>());
  if (f.bad()) throw UsageError("read failed: " + path);
  return data;
}

}  // namespace abka

#endif  // ABKA_WIRE_HPP
