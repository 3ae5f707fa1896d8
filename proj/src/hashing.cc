//
// Copyright 2026 The ldp-audit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "ldp_audit/hashing.h"

#include <string>

#include "ldp_audit/errors.h"

namespace ldp_audit {
namespace {

// Uniform draw on [0, n) from a SplitMix64 sequence, by rejection.
uint64_t DrawBelow(uint64_t& state, uint64_t n) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  while (true) {
    state += 0x9e3779b97f4a7c15ULL;
    const uint64_t word = Mix64(state);
    if (word < limit) return word % n;
  }
}

void CheckRange(int g) {
  if (g < 2) {
    throw DomainError("hash range g must be at least 2, got " +
                      std::to_string(g));
  }
}

}  // namespace

HashFunction HashFunction::FromSeed(uint64_t seed, int g) {
  CheckRange(g);
  uint64_t state = seed;
  const uint64_t a = 1 + DrawBelow(state, kPrime - 1);
  const uint64_t b = DrawBelow(state, kPrime);
  return HashFunction(a, b, g, seed);
}

HashFunction HashFunction::FromCoefficients(uint64_t a, uint64_t b, int g) {
  CheckRange(g);
  if (a < 1 || a >= kPrime || b >= kPrime) {
    throw DomainError("hash coefficients out of range");
  }
  return HashFunction(a, b, g, 0);
}

int HashFunction::operator()(int64_t v) const {
  if (v < 0 || static_cast<uint64_t>(v) >= kPrime) {
    throw DomainError("hash input out of range: " + std::to_string(v));
  }
  // a, v < 2^32 so the product fits in 64 bits.
  const uint64_t mixed = (a_ * static_cast<uint64_t>(v) + b_) % kPrime;
  return static_cast<int>(mixed % static_cast<uint64_t>(g_));
}

HashFunction NewHash(Rng& rng, int64_t k, int g) {
  if (k < 1 || static_cast<uint64_t>(k) >= HashFunction::kPrime) {
    throw DomainError("hash domain size out of range: " + std::to_string(k));
  }
  return HashFunction::FromSeed(rng.NextU64(), g);
}

int EvalHash(const HashFunction& h, int64_t v, int64_t k) {
  if (v < 0 || v >= k) {
    throw DomainError("value " + std::to_string(v) + " outside [0, " +
                      std::to_string(k) + ")");
  }
  return h(v);
}

}  // namespace ldp_audit
