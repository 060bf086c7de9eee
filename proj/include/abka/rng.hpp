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

#ifndef ABKA_RNG_HPP
#define ABKA_RNG_HPP

#include <cstdint>
#include <span>
#include <stdexcept>

#include <openssl/rand.h>

#include "abka/scalar.hpp"

namespace abka {

// Injected randomness source. `uniform_scalar` is virtual so tests can
// script exact scalar sequences without reverse-engineering the
// rejection sampler.
class Rng {
 public:
  virtual ~Rng() = default;

  virtual void fill(std::span<std::uint8_t> out) = 0;

  // Uniform in [0, modulus) by rejection sampling.
  virtual Scalar uniform_scalar(const mpz_class& modulus) {
    if (modulus <= 1) throw UsageError("modulus must exceed 1");
    const std::size_t width = byte_length(modulus);
    const std::size_t bits = mpz_sizeinbase(modulus.get_mpz_t(), 2);
    const std::uint8_t top_mask =
        static_cast<std::uint8_t>(0xff >> (8 * width - bits));
    Bytes buf(width);
    for (;;) {
      fill(buf);
      buf[0] &= top_mask;
      mpz_class candidate = mpz_from_be(buf);
      if (candidate < modulus) {
        secure_wipe(buf);
        return Scalar(candidate);
      }
    }
  }

  // Uniform in [1, modulus).
  Scalar uniform_nonzero_scalar(const mpz_class& modulus) {
    for (;;) {
      Scalar s = uniform_scalar(modulus);
      if (!s.is_zero()) return s;
    }
  }
};

// Process-wide CSPRNG.
class SystemRng final : public Rng {
 public:
  void fill(std::span<std::uint8_t> out) override {
    if (out.empty()) return;
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
      throw std::runtime_error("system rng failure");
    }
  }
};

}  // namespace abka

#endif  // ABKA_RNG_HPP
