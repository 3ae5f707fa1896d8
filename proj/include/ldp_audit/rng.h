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

#ifndef LDP_AUDIT_RNG_H_
#define LDP_AUDIT_RNG_H_

#include <cstdint>
#include <optional>
#include <random>

namespace ldp_audit {

// SplitMix64 finalizer. Used to derive independent seeds from a master seed
// and a stream index.
uint64_t Mix64(uint64_t x);

// Combines a seed with any number of indices into a new 64-bit seed.
uint64_t DeriveSeed(uint64_t seed, uint64_t index);
uint64_t DeriveSeed(uint64_t seed, uint64_t index_a, uint64_t index_b);

// Seeded random stream. All sampling routines are implemented on top of the
// raw 64-bit engine output so that results are identical across standard
// library implementations.
//
// Not thread-safe: every worker owns its stream.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  // Stream `index` of the family rooted at `master_seed`.
  static Rng ForStream(uint64_t master_seed, uint64_t index);

  uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform01();

  // Uniform on (0, 1).
  double UniformOpen01();

  // Uniform integer on [0, n). Unbiased. Requires n > 0.
  uint64_t UniformInt(uint64_t n);

  bool Bernoulli(double p) { return Uniform01() < p; }

  // Laplace(0, scale) by inverse CDF on u ~ Uniform(-1/2, 1/2).
  double Laplace(double scale);

  // Standard normal by the Marsaglia polar method.
  double StandardNormal();

  double Gaussian(double sigma) { return sigma * StandardNormal(); }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

}  // namespace ldp_audit

#endif  // LDP_AUDIT_RNG_H_
