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

// Random sampling plus fake data (RS+FD) for d attributes: one sampled
// attribute is perturbed with the amplified budget, every other attribute
// carries fake data. The sampled index is never part of the report.

#ifndef LDP_AUDIT_RSFD_H_
#define LDP_AUDIT_RSFD_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ldp_audit/attacks.h"
#include "ldp_audit/protocols.h"
#include "ldp_audit/report.h"
#include "ldp_audit/rng.h"

namespace ldp_audit {

// UE-z fakes start from the zero vector, UE-r fakes from a random one-hot
// vector; both are then UE-perturbed.
enum class RsfdVariant { kGrr, kSueZ, kSueR, kOueZ, kOueR };

std::string RsfdVariantName(RsfdVariant variant);
std::optional<RsfdVariant> ParseRsfdVariant(std::string_view name);

// ln(d (e^eps - 1) + 1). d = 1 returns epsilon unchanged.
double AmplifiedEpsilon(double epsilon, int d);

struct RsfdSpec {
  RsfdVariant variant;
  double epsilon;
  int d;
  std::vector<int> k_vec;
  double epsilon_amp;
  // Base mechanism per attribute, resolved at epsilon_amp.
  std::vector<ProtocolSpec> base;
};

// d = k_vec.size(). Throws DomainError for epsilon <= 0, an empty k_vec or
// any domain size below 2.
RsfdSpec ResolveRsfdSpec(RsfdVariant variant, double epsilon,
                         std::vector<int> k_vec);

struct RsfdReport {
  std::vector<Report> per_attribute;
};

// Throws DomainError when values does not match k_vec in length or range.
RsfdReport RsfdPerturb(const RsfdSpec& spec, std::span<const int> values,
                       Rng& rng);

struct RsfdPrediction {
  int attribute;  // guessed sampled attribute
  AttackPrediction prediction;
};

// Guesses the sampled attribute uniformly, then attacks its report with the
// base protocol's support-set attack.
RsfdPrediction RsfdAttack(const RsfdSpec& spec, const RsfdReport& report,
                          Rng& rng);

}  // namespace ldp_audit

#endif  // LDP_AUDIT_RSFD_H_
