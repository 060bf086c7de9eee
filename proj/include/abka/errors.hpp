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

#ifndef ABKA_ERRORS_HPP
#define ABKA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abka {

// Caller broke a precondition (wrong group, empty attribute set, ...).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed or non-canonical bytes on the wire or on disk.
class WireError : public std::runtime_error {
 public:
  explicit WireError(const std::string& what) : std::runtime_error(what) {}
};

// Policy text did not match the grammar. `offset` is a byte offset into
// the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Peer violated the message flow (unexpected frame, bad session id, ...).
class ProtocolError : public std::runtime_error {
 public:
  explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

// Transport-level failure (peer closed, socket error).
class TransportError : public std::runtime_error {
 public:
  explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

// Client-side refusal to answer a challenge. Distinct kinds map to
// distinct CLI exit codes.
class AuthRefusal : public std::runtime_error {
 public:
  enum class Kind {
    policy_not_satisfied,
    revoked_attribute,
    stale_revocation_list,
    anonymity,
    missing_confirmation,
  };

  AuthRefusal(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace abka

#endif  // ABKA_ERRORS_HPP
