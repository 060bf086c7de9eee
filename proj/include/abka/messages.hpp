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

#ifndef ABKA_MESSAGES_HPP
#define ABKA_MESSAGES_HPP

#include <array>
#include <cstdint>
#include <string>

#include "abka/abkem.hpp"
#include "abka/policy.hpp"
#include "abka/suite.hpp"

namespace abka {

using SessionId = std::array<std::uint8_t, 16>;

// Server -> client: the access policy as a span program plus the
// encapsulated partial key.
struct Challenge {
  std::uint8_t suite_id = 0;
  SessionId session_id{};
  std::uint32_t arl_version = 0;
  std::string id_sp;
  MspProgram msp;
  Encapsulation encap;
};

// Client -> server: the client's ephemeral partial key, optionally
// with a key-confirmation tag.
struct Response {
  std::uint8_t suite_id = 0;
  SessionId session_id{};
  GroupElement b;  // GT
  bool has_mac = false;
  std::array<std::uint8_t, 32> mac{};
};

// Server -> client: outcome notification.
struct ResultMsg {
  SessionId session_id{};
  bool accepted = false;
  std::string reason;
};

}  // namespace abka

#endif  // ABKA_MESSAGES_HPP
