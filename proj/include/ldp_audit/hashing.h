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

#ifndef LDP_AUDIT_HASHING_H_
#define LDP_AUDIT_HASHING_H_

#include <cstdint>

#include "ldp_audit/rng.h"

namespace ldp_audit {

// Member of the multiply-add-mod-prime family
//   H(v) = ((a * v + b) mod P) mod g,   a in [1, P), b in [0, P),
// which is pairwise independent over [0, P). The function is fully
// determined by (seed, g); the seed is what travels in a report.
class HashFunction {
 public:
  // Smallest prime >= 2^31. Supported domain sizes are below it.
  static constexpr uint64_t kPrime = 2147483659ULL;

  // Reconstructs the function identified by `seed`. Throws DomainError
  // when g < 2.
  static HashFunction FromSeed(uint64_t seed, int g);

  // Test hook: a function with explicit coefficients.
  static HashFunction FromCoefficients(uint64_t a, uint64_t b, int g);

  // H(v). Throws DomainError if v is negative or not below kPrime.
  int operator()(int64_t v) const;

  uint64_t a() const { return a_; }
  uint64_t b() const { return b_; }
  int g() const { return g_; }
  uint64_t seed() const { return seed_; }

  friend bool operator==(const HashFunction&, const HashFunction&) = default;

 private:
  HashFunction(uint64_t a, uint64_t b, int g, uint64_t seed)
      : a_(a), b_(b), g_(g), seed_(seed) {}

  uint64_t a_;
  uint64_t b_;
  int g_;
  uint64_t seed_;
};

// Draws a fresh hash function into [g] for a domain of size k. Consumes one
// 64-bit word from `rng`. Throws DomainError when k < 1, g < 2 or k exceeds
// the supported domain.
HashFunction NewHash(Rng& rng, int64_t k, int g);

// H(v) with a range check against the domain size: throws DomainError when
// v is outside [0, k).
int EvalHash(const HashFunction& h, int64_t v, int64_t k);

}  // namespace ldp_audit

#endif  // LDP_AUDIT_HASHING_H_
