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
// abka command-line tool: authority administration, policy tooling,
// server, client, and an in-process demo.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 authentication
// rejection, 3 anonymity-guard refusal.

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "abka/abka.hpp"

namespace {

using namespace abka;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAuthRejected = 2;
constexpr int kExitAnonymity = 3;

// First 8 hex chars of SHA-256(K_d): comparable by eye, reveals
// nothing useful about the key.
std::string key_fingerprint(const Digest32& kd) {
  Digest32 d = sha256(ByteSpan(kd.data(), kd.size()));
  return to_hex(ByteSpan(d.data(), d.size())).substr(0, 8);
}

std::string file_fingerprint(ByteSpan bytes) {
  Digest32 d = sha256(bytes);
  return to_hex(ByteSpan(d.data(), d.size())).substr(0, 8);
}

std::string hex(ByteSpan b) { return to_hex(b); }

AttributeSet parse_attr_csv(const std::string& csv) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string::npos) comma = csv.size();
    std::string name = csv.substr(start, comma - start);
    while (!name.empty() && (name.front() == ' ' || name.front() == '\t')) {
      name.erase(name.begin());
    }
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) {
      name.pop_back();
    }
    if (!name.empty()) names.push_back(std::move(name));
    start = comma + 1;
  }
  if (names.empty()) throw UsageError("no attributes given");
  return AttributeSet(std::move(names));
}

// Entries of a decoded span program are reduced mod p; print the
// signed representative so -1 reads as -1.
std::string signed_entry(const mpz_class& e, const mpz_class& p) {
  if (e > p / 2) {
    mpz_class s = e - p;
    return s.get_str();
  }
  return e.get_str();
}

void print_msp(const MspProgram& msp, const mpz_class* p) {
  std::printf("msp: %zu rows x %zu cols\n", msp.rows, msp.cols);
  for (std::size_t i = 0; i < msp.rows; ++i) {
    std::string row = "(";
    for (std::size_t j = 0; j < msp.cols; ++j) {
      if (j) row += ", ";
      row += p ? signed_entry(msp.at(i, j), *p) : msp.at(i, j).get_str();
    }
    row += ")";
    std::printf("  row %zu %-20s %s\n", i, msp.labels[i].c_str(),
                row.c_str());
  }
}

struct AuthorityPaths {
  std::string dir;
  std::string params() const { return dir + "/params.bin"; }
  std::string mpk() const { return dir + "/mpk.bin"; }
  std::string msk() const { return dir + "/msk.bin"; }
  std::string arl() const { return dir + "/arl.bin"; }
};

SystemParams load_params(const std::string& path) {
  return decode_params_file(load_file(path));
}

AuthorityState load_authority(const AuthorityPaths& paths) {
  AuthorityState st;
  st.params = load_params(paths.params());
  st.keys.mpk = decode_mpk_file(*st.params.suite, load_file(paths.mpk()));
  st.keys.msk = decode_msk_file(*st.params.suite, load_file(paths.msk()));
  st.arl = decode_arl_file(load_file(paths.arl()));
  return st;
}

void store_authority(const AuthorityPaths& paths, const AuthorityState& st) {
  const Suite& suite = *st.params.suite;
  save_file(paths.params(), encode_params_file(st.params));
  save_file(paths.mpk(), encode_mpk_file(suite, st.keys.mpk));
  save_file(paths.msk(), encode_msk_file(suite, st.keys.msk));
  save_file(paths.arl(), encode_arl_file(suite.id(), st.arl));
}

// ------------------------------------------------------- authority --

int cmd_authority_init(const std::string& suite_name,
                       std::uint64_t mock_prime, const std::string& out) {
  std::shared_ptr<Suite> suite;
  if (suite_name == "mock" && mock_prime != 0) {
    suite = std::make_shared<MockSuite>(mock_prime);
  } else {
    if (mock_prime != 0) {
      throw UsageError("--mock-prime only applies to --suite mock");
    }
    suite = make_suite(suite_name);
  }
  std::filesystem::create_directories(out);
  SystemRng rng;
  AuthorityState st = authority_init(std::move(suite), rng);
  AuthorityPaths paths{out};
  store_authority(paths, st);
  Bytes mpk_bytes = encode_mpk_file(*st.params.suite, st.keys.mpk);
  std::printf("suite: %s (k=%u)\n", st.params.suite->name().c_str(),
              st.params.security_k);
  std::printf("mpk fingerprint: %s\n", file_fingerprint(mpk_bytes).c_str());
  std::printf("arl version: %u\n", st.arl.version);
  std::printf("wrote %s, %s, %s, %s\n", paths.params().c_str(),
              paths.mpk().c_str(), paths.msk().c_str(), paths.arl().c_str());
  return kExitOk;
}

int cmd_authority_issue(const std::string& dir, const std::string& attrs_csv,
                        const std::string& out) {
  AuthorityPaths paths{dir};
  AuthorityState st = load_authority(paths);
  AttributeSet attrs = parse_attr_csv(attrs_csv);
  SystemRng rng;
  AttributeSecretKey sk = authority_issue(st, attrs, rng);
  Bytes sk_bytes = encode_sk_file(*st.params.suite, sk);
  save_file(out, sk_bytes);
  std::string joined;
  for (const std::string& a : attrs.names()) {
    if (!joined.empty()) joined += ",";
    joined += a;
  }
  std::printf("issued key for {%s}\n", joined.c_str());
  std::printf("sk fingerprint: %s\n", file_fingerprint(sk_bytes).c_str());
  std::printf("wrote %s\n", out.c_str());
  return kExitOk;
}

int cmd_authority_revoke(const std::string& dir, const std::string& attr) {
  AuthorityPaths paths{dir};
  AuthorityState st = load_authority(paths);
  const AttributeRevocationList& arl = authority_revoke(st, attr);
  save_file(paths.arl(), encode_arl_file(st.params.suite->id(), arl));
  std::printf("revoked: %s\n", attr.c_str());
  std::printf("arl version: %u (%zu attribute(s) revoked)\n", arl.version,
              arl.revoked.size());
  return kExitOk;
}

int cmd_authority_rotate(const std::string& dir) {
  AuthorityPaths paths{dir};
  AuthorityState st = load_authority(paths);
  SystemRng rng;
  authority_rotate(st, rng);
  store_authority(paths, st);
  Bytes mpk_bytes = encode_mpk_file(*st.params.suite, st.keys.mpk);
  std::printf("rotated master keys; previously issued keys are now void\n");
  std::printf("mpk fingerprint: %s\n", file_fingerprint(mpk_bytes).c_str());
  std::printf("arl version: %u (preserved)\n", st.arl.version);
  return kExitOk;
}

// ---------------------------------------------------------- policy --

int cmd_policy_compile(const std::string& expr, const std::string& out,
                       const std::string& suite_name) {
  PolicyFormula policy = parse_policy(expr);
  MspProgram msp = compile_msp(policy);
  std::printf("policy: %s\n", to_string(policy).c_str());
  print_msp(msp, nullptr);
  if (!out.empty()) {
    std::shared_ptr<Suite> suite = make_suite(suite_name);
    Bytes bytes;
    encode_msp_bytes(bytes, msp, suite->order());
    save_file(out, bytes);
    std::printf("wrote %s (%zu bytes, suite %s)\n", out.c_str(),
                bytes.size(), suite->name().c_str());
  }
  return kExitOk;
}

int cmd_policy_check(const std::string& expr, const std::string& attrs_csv) {
  PolicyFormula policy = parse_policy(expr);
  AttributeSet attrs = parse_attr_csv(attrs_csv);
  if (satisfies(policy, attrs)) {
    std::printf("satisfied\n");
  } else {
    std::printf("not satisfied\n");
  }
  return kExitOk;
}

int cmd_policy_anonymity(const std::string& expr,
                         const std::string& roster_path, std::size_t r) {
  PolicyFormula policy = parse_policy(expr);
  Bytes text = load_file(roster_path);
  Roster roster = parse_roster(
      std::string_view(reinterpret_cast<const char*>(text.data()),
                       text.size()));
  std::size_t count = count_satisfying(policy, roster);
  bool ok = verify_r_anonymity(policy, roster, r);
  std::printf("%s: %zu of %zu roster user(s) satisfy the policy (r=%zu)\n",
              ok ? "pass" : "fail", count, roster.users.size(), r);
  return ok ? kExitOk : kExitAnonymity;
}

// ----------------------------------------------------- serve/login --

int cmd_serve(const std::string& dir, const std::string& policy_expr,
              const std::string& policy_file, std::uint16_t port,
              const std::string& id_sp, bool require_confirmation,
              bool once) {
  AuthorityPaths paths{dir};
  SystemParams params = load_params(paths.params());
  MasterPublicKey mpk =
      decode_mpk_file(*params.suite, load_file(paths.mpk()));
  AttributeRevocationList arl = decode_arl_file(load_file(paths.arl()));

  std::string expr = policy_expr;
  if (!policy_file.empty()) {
    Bytes text = load_file(policy_file);
    expr.assign(reinterpret_cast<const char*>(text.data()), text.size());
  }
  if (expr.empty()) throw UsageError("no policy given");
  PolicyFormula policy = parse_policy(expr);
  // Fail fast instead of refusing every connection.
  for (const std::string& attr : policy.attributes()) {
    if (arl.is_revoked(attr)) {
      throw AuthRefusal(AuthRefusal::Kind::revoked_attribute,
                        "policy names revoked attribute: " + attr);
    }
  }
  ServerConfig cfg(params, mpk, policy, id_sp, require_confirmation, arl);

  TcpListener listener(port);
  std::printf("listening on port %u\n", listener.port());
  std::printf("policy: %s (arl v%u, confirmation %s)\n",
              to_string(policy).c_str(), arl.version,
              require_confirmation ? "required" : "optional");
  std::fflush(stdout);

  auto handle = [&cfg](std::unique_ptr<Transport> t) -> int {
    SystemRng rng;
    AuthResult res = run_server_handshake(*t, cfg, rng);
    if (res.accepted) {
      std::printf("accepted; fingerprint: %s\n",
                  key_fingerprint(res.keys->key()).c_str());
      std::fflush(stdout);
      return kExitOk;
    }
    std::printf("rejected (%s)\n", res.reason.c_str());
    std::fflush(stdout);
    return kExitAuthRejected;
  };

  if (once) {
    return handle(listener.accept());
  }
  while (true) {
    std::unique_ptr<Transport> t = listener.accept();
    std::thread([&handle, conn = std::move(t)]() mutable {
      try {
        handle(std::move(conn));
      } catch (const std::exception& e) {
        std::fprintf(stderr, "connection error: %s\n", e.what());
      }
    }).detach();
  }
}

int cmd_login(const std::string& sk_path, const std::string& dir,
              const std::string& arl_path, const std::string& host,
              std::uint16_t port, bool confirm, std::size_t min_anonymity,
              const std::string& roster_path) {
  AuthorityPaths paths{dir};
  SystemParams params = load_params(paths.params());
  MasterPublicKey mpk =
      decode_mpk_file(*params.suite, load_file(paths.mpk()));
  AttributeSecretKey sk = decode_sk_file(*params.suite, load_file(sk_path));

  ClientCredentials creds{params, mpk, std::move(sk), {}, {}};
  if (!arl_path.empty()) {
    creds.arl = decode_arl_file(load_file(arl_path));
  }
  std::optional<Roster> roster;
  if (min_anonymity > 0) {
    if (roster_path.empty()) {
      throw UsageError("--min-anonymity requires --roster");
    }
    creds.min_anonymity_r = min_anonymity;
    Bytes text = load_file(roster_path);
    roster = parse_roster(
        std::string_view(reinterpret_cast<const char*>(text.data()),
                         text.size()));
  }

  std::unique_ptr<Transport> t = connect_tcp(host, port);
  SystemRng rng;
  ClientResult res = run_client_handshake(*t, creds, roster, rng, confirm);
  if (res.accepted) {
    std::printf("accepted\n");
    std::printf("fingerprint: %s\n",
                key_fingerprint(res.keys->key()).c_str());
    return kExitOk;
  }
  std::printf("rejected (%s)\n", res.reason.c_str());
  return kExitAuthRejected;
}

// ------------------------------------------------------------ demo --

// Runs authority, server, and client in one process over the loopback
// transport on the mock suite, narrating each message.
int cmd_demo(const std::string& policy_expr, const std::string& attrs_csv,
             const std::string& tamper, bool confirm) {
  if (!tamper.empty() && tamper != "response") {
    throw UsageError("--tamper accepts only: response");
  }
  std::printf("abka demo — mock pairing suite (trapdoor exponents; never "
              "use outside tests)\n\n");
  SystemRng rng;
  AuthorityState st = authority_init(make_suite("mock"), rng);
  std::printf("[authority] init: msk = g1^a, mpk = (g1^b, e(g1,g2)^a); "
              "arl v%u\n", st.arl.version);

  const std::string expr =
      policy_expr.empty() ? "doctor AND cardiology" : policy_expr;
  PolicyFormula policy = parse_policy(expr);
  AttributeSet attrs = [&] {
    if (!attrs_csv.empty()) return parse_attr_csv(attrs_csv);
    const auto& names = policy.attributes();
    return AttributeSet(std::vector<std::string>(names.begin(), names.end()));
  }();
  AttributeSecretKey sk = authority_issue(st, attrs, rng);
  std::string joined;
  for (const std::string& a : attrs.names()) {
    if (!joined.empty()) joined += ",";
    joined += a;
  }
  std::printf("[authority] issue {%s}: x1 = msk * mpk1^r = g1^(a+br), "
              "x2 = g2^r, sk_i = H(s_i)^r\n\n", joined.c_str());

  ServerConfig cfg(st.params, st.keys.mpk, policy, "demo.abka", confirm,
                   st.arl);
  const Suite& suite = *st.params.suite;
  const mpz_class& p = suite.order();
  LoopbackPair pair;
  Transport& client_t = pair.a();
  Transport& server_t = pair.b();

  client_t.send(FrameType::hello, ByteSpan());
  std::printf("client -> server: Hello\n\n");

  server_t.recv();
  auto [ch, session] = server_begin(cfg, rng);
  Bytes ch_bytes = encode_challenge(suite, ch);
  server_t.send(FrameType::challenge, ch_bytes);
  std::printf("server -> client: Challenge (%zu bytes)\n", ch_bytes.size());
  std::printf("  session_id: %s\n",
              hex(ByteSpan(ch.session_id.data(), ch.session_id.size()))
                  .c_str());
  std::printf("  arl_version: %u   id_sp: %s\n", ch.arl_version,
              ch.id_sp.c_str());
  std::printf("  policy: %s\n", to_string(policy).c_str());
  print_msp(ch.msp, &p);
  std::printf("  encapsulation over the span program:\n");
  std::printf("    mu = M * (s, v2..vm);  z = g2^s\n");
  std::printf("    c_i1 = mpk1^mu_i * H(label_i)^(-r_i);  c_i2 = g2^r_i\n");
  std::printf("    server keeps s; the partial key K = mpk2^s = "
              "e(g1,g2)^(a s) is recomputed at finish\n\n");

  Frame cf = client_t.recv();
  Challenge ch_rx = decode_challenge(suite, cf.payload);
  ClientCredentials creds{st.params, st.keys.mpk, std::move(sk), {}, st.arl};
  auto [resp, client_keys] =
      client_respond(creds, ch_rx, std::nullopt, rng, confirm);
  Bytes resp_bytes = encode_response(suite, resp);
  bool tampered = tamper == "response";
  if (tampered) {
    resp_bytes.back() ^= 0x01;
  }
  client_t.send(FrameType::response, resp_bytes);
  std::printf("client -> server: Response (%zu bytes)%s\n",
              resp_bytes.size(), tampered ? "  [tampered in flight]" : "");
  std::printf("  decapsulated K = e(x1,z) / (e(w,x2) * prod_i e(sk_i, "
              "c_i2^d_i)),  w = prod_i c_i1^d_i\n");
  std::printf("  B = mpk2^b_eph   (fresh b_eph; K_DH = K^b_eph)\n");
  if (confirm) {
    std::printf("  confirmation: m = HMAC(k_mac, Challenge || B || id_sp)\n");
  }
  std::printf("\n");

  AuthResult res;
  Frame rf = server_t.recv();
  try {
    Response resp_rx = decode_response(suite, rf.payload);
    res = session.finish(cfg, resp_rx);
  } catch (const WireError& e) {
    session.expire();
    res.accepted = false;
    res.reason = std::string("malformed response: ") + e.what();
  }
  ResultMsg msg;
  msg.session_id = session.id();
  msg.accepted = res.accepted;
  msg.reason = res.reason;
  server_t.send(FrameType::result, encode_result(msg));
  std::printf("server -> client: Result\n");
  std::printf("  server recomputed K_DH = B^s, then K_d, k_mac = "
              "KDF(K_DH, transcript)\n");

  Frame result_frame = client_t.recv();
  ResultMsg res_rx = decode_result(result_frame.payload);

  std::string trace_line;
  for (FrameType t : pair.trace()) {
    if (!trace_line.empty()) trace_line += ", ";
    switch (t) {
      case FrameType::hello: trace_line += "Hello"; break;
      case FrameType::challenge: trace_line += "Challenge"; break;
      case FrameType::response: trace_line += "Response"; break;
      case FrameType::result: trace_line += "Result"; break;
    }
  }
  std::printf("  trace: %s\n\n", trace_line.c_str());

  if (res_rx.accepted) {
    std::string server_fp = key_fingerprint(res.keys->key());
    std::string client_fp = key_fingerprint(client_keys.key());
    std::printf("server fingerprint: %s\n", server_fp.c_str());
    std::printf("client fingerprint: %s\n", client_fp.c_str());
    if (server_fp != client_fp) {
      std::printf("fingerprint mismatch\n");
      return kExitAuthRejected;
    }
    std::printf("session keys match\n");
  } else {
    std::printf("rejected (%s)\n", res_rx.reason.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"attribute-based anonymous authentication toolkit"};
  app.require_subcommand(1);

  // authority
  auto* authority = app.add_subcommand("authority", "key-generation authority");
  authority->require_subcommand(1);

  std::string init_suite = "bls12-381";
  std::uint64_t init_mock_prime = 0;
  std::string init_out = "authority";
  auto* init = authority->add_subcommand("init", "create a master key pair");
  init->add_option("--suite", init_suite,
                   "pairing suite: bls12-381 or mock (mock is insecure and "
                   "must be chosen explicitly)");
  init->add_option("--mock-prime", init_mock_prime,
                   "group order for the mock suite");
  init->add_option("--out", init_out, "output directory");

  std::string dir = "authority";
  std::string issue_attrs;
  std::string issue_out = "sk.bin";
  auto* issue = authority->add_subcommand("issue", "issue an attribute key");
  issue->add_option("--dir", dir, "authority directory");
  issue->add_option("--attrs", issue_attrs, "comma-separated attributes")
      ->required();
  issue->add_option("--out", issue_out, "output key file");

  std::string revoke_attr;
  auto* revoke = authority->add_subcommand("revoke", "revoke an attribute");
  revoke->add_option("--dir", dir, "authority directory");
  revoke->add_option("--attr", revoke_attr, "attribute to revoke")
      ->required();

  auto* rotate =
      authority->add_subcommand("rotate", "replace the master key pair");
  rotate->add_option("--dir", dir, "authority directory");

  // policy
  auto* policy = app.add_subcommand("policy", "policy tooling");
  policy->require_subcommand(1);

  std::string policy_expr;
  std::string compile_out;
  std::string compile_suite = "bls12-381";
  auto* compile =
      policy->add_subcommand("compile", "compile to a span program");
  compile->add_option("expr", policy_expr, "policy expression")->required();
  compile->add_option("--out", compile_out, "write binary span program");
  compile->add_option("--suite", compile_suite,
                      "suite whose group order sizes binary scalars");

  std::string check_attrs;
  auto* check = policy->add_subcommand("check", "evaluate an attribute set");
  check->add_option("expr", policy_expr, "policy expression")->required();
  check->add_option("--attrs", check_attrs, "comma-separated attributes")
      ->required();

  std::string roster_path;
  std::size_t anon_r = 1;
  auto* anonymity =
      policy->add_subcommand("anonymity", "check r-anonymity over a roster");
  anonymity->add_option("expr", policy_expr, "policy expression")->required();
  anonymity->add_option("--roster", roster_path, "roster file")->required();
  anonymity->add_option("--r", anon_r, "minimum satisfying users")
      ->required();

  // serve
  std::string serve_policy;
  std::string serve_policy_file;
  std::uint16_t serve_port = 7701;
  std::string id_sp = "abka.service";
  bool require_confirmation = false;
  bool serve_once = false;
  auto* serve = app.add_subcommand("serve", "run the authentication server");
  serve->add_option("--dir", dir, "authority directory (params/mpk/arl)");
  serve->add_option("--policy", serve_policy, "policy expression");
  serve->add_option("--policy-file", serve_policy_file,
                    "file holding the policy expression");
  serve->add_option("--port", serve_port, "listen port (0 = ephemeral)");
  serve->add_option("--id-sp", id_sp, "service identity bound into the KDF");
  serve->add_flag("--require-confirmation", require_confirmation,
                  "reject responses without a confirmation tag");
  serve->add_flag("--once", serve_once,
                  "serve a single connection, exit with its outcome");

  // login
  std::string sk_path = "sk.bin";
  std::string login_arl;
  std::string host = "127.0.0.1";
  std::uint16_t login_port = 7701;
  bool login_confirm = false;
  std::size_t min_anonymity = 0;
  std::string login_roster;
  auto* login = app.add_subcommand("login", "authenticate to a server");
  login->add_option("--sk", sk_path, "attribute key file");
  login->add_option("--dir", dir, "authority directory (params/mpk)");
  login->add_option("--arl", login_arl, "local revocation list file");
  login->add_option("--host", host, "server host");
  login->add_option("--port", login_port, "server port");
  login->add_flag("--confirm", login_confirm, "send a confirmation tag");
  login->add_option("--min-anonymity", min_anonymity,
                    "refuse unless at least this many roster users satisfy "
                    "the policy");
  login->add_option("--roster", login_roster, "roster file for the guard");

  // demo
  std::string demo_policy;
  std::string demo_attrs;
  std::string demo_tamper;
  bool demo_no_confirm = false;
  auto* demo =
      app.add_subcommand("demo", "end-to-end run on the mock suite");
  demo->add_option("--policy", demo_policy, "policy expression");
  demo->add_option("--attrs", demo_attrs, "attributes to issue");
  demo->add_option("--tamper", demo_tamper,
                   "corrupt a message in flight (response)");
  demo->add_flag("--no-confirm", demo_no_confirm,
                 "run the variant without key confirmation");

  CLI11_PARSE(app, argc, argv);

  try {
    if (init->parsed()) {
      return cmd_authority_init(init_suite, init_mock_prime, init_out);
    }
    if (issue->parsed()) {
      return cmd_authority_issue(dir, issue_attrs, issue_out);
    }
    if (revoke->parsed()) return cmd_authority_revoke(dir, revoke_attr);
    if (rotate->parsed()) return cmd_authority_rotate(dir);
    if (compile->parsed()) {
      return cmd_policy_compile(policy_expr, compile_out, compile_suite);
    }
    if (check->parsed()) return cmd_policy_check(policy_expr, check_attrs);
    if (anonymity->parsed()) {
      return cmd_policy_anonymity(policy_expr, roster_path, anon_r);
    }
    if (serve->parsed()) {
      return cmd_serve(dir, serve_policy, serve_policy_file, serve_port,
                       id_sp, require_confirmation, serve_once);
    }
    if (login->parsed()) {
      return cmd_login(sk_path, dir, login_arl, host, login_port,
                       login_confirm, min_anonymity, login_roster);
    }
    if (demo->parsed()) {
      return cmd_demo(demo_policy, demo_attrs, demo_tamper,
                      !demo_no_confirm);
    }
  } catch (const AuthRefusal& e) {
    std::fprintf(stderr, "refused: %s\n", e.what());
    return e.kind() == AuthRefusal::Kind::anonymity ? kExitAnonymity
                                                    : kExitAuthRejected;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error at offset %zu: %s\n", e.offset(),
                 e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
