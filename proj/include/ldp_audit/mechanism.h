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

#ifndef LDP_AUDIT_MECHANISM_H_
#define LDP_AUDIT_MECHANISM_H_

#include <optional>
#include <string>
#include <variant>

#include "ldp_audit/approx_protocols.h"
#include "ldp_audit/attacks.h"
#include "ldp_audit/protocols.h"
#include "ldp_audit/report.h"
#include "ldp_audit/rng.h"

namespace ldp_audit {

// Local hashing with no perturbation: <H, H(v)>.
struct LhoSpec {
  int k;
  int g;
};

// UE with the missing correction step: bits are first set with probability
// q everywhere, then the true position is set with probability p, and a
// q-flip on the true position is never reverted.
struct BuggyUeSpec {
  ProtocolSpec ue;
};

Hashed LhoPerturb(const LhoSpec& spec, int v, Rng& rng);

// Pr[y_v = 1] = p + q - pq. Throws DomainError unless spec is SUE or OUE.
BitVector BuggyUePerturb(const ProtocolSpec& spec, int v, Rng& rng);

// A client mechanism together with the attack that matches it.
class Mechanism {
 public:
  static Mechanism Pure(const ProtocolSpec& spec) { return Mechanism(spec); }
  static Mechanism Approximate(const ApproxSpec& spec) { return Mechanism(spec); }
  static Mechanism LocalHashingOnly(int k, int g);
  static Mechanism BuggyUnaryEncoding(const ProtocolSpec& spec);

  Report Perturb(int v, Rng& rng) const;

  // Single-report attack A_M.
  AttackPrediction Attack(const Report& report, Rng& rng) const;

  AttackFamily family() const;
  int k() const;
  // +infinity for LHO.
  double epsilon() const;
  double delta() const;
  // THE threshold, when the mechanism has one.
  std::optional<double> theta() const;
  // Laplace scale (SHE/THE) or Gaussian sigma (GM/AGM); 0 otherwise.
  double noise_scale() const;
  // Hash range for LH-style mechanisms, 0 otherwise.
  int hash_range() const;
  std::string name() const;

 private:
  using Spec = std::variant<ProtocolSpec, ApproxSpec, LhoSpec, BuggyUeSpec>;
  explicit Mechanism(Spec spec) : spec_(std::move(spec)) {}

  Spec spec_;
};

}  // namespace ldp_audit

#endif  // LDP_AUDIT_MECHANISM_H_
