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
// Umbrella header.

#ifndef ABKA_ABKA_HPP
#define ABKA_ABKA_HPP

#include "abka/abkem.hpp"
#include "abka/arl.hpp"
#include "abka/authority.hpp"
#include "abka/bls381_suite.hpp"
#include "abka/bytes.hpp"
#include "abka/errors.hpp"
#include "abka/hash.hpp"
#include "abka/messages.hpp"
#include "abka/mock_suite.hpp"
#include "abka/policy.hpp"
#include "abka/protocol.hpp"
#include "abka/rng.hpp"
#include "abka/scalar.hpp"
#include "abka/suite.hpp"
#include "abka/suites.hpp"
#include "abka/transport.hpp"
#include "abka/wire.hpp"

#endif  // ABKA_ABKA_HPP
