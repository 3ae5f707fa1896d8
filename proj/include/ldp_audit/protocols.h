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

// Pure epsilon-LDP frequency-estimation mechanisms: client-side encoding and
// perturbation. Values are 0-indexed, V = {0, ..., k-1}.

#ifndef LDP_AUDIT_PROTOCOLS_H_
#define LDP_AUDIT_PROTOCOLS_H_

#include <optional>
#include <string>
#include <string_view>

#include "ldp_audit/report.h"
#include "ldp_audit/rng.h"

namespace ldp_audit {

enum class Protocol { kGrr, kSs, kSue, kOue, kBlh, kOlh, kShe, kThe };

inline constexpr double kDefaultTheThreshold = 0.67;

// Resolved parameters for one (protocol, epsilon, k). Fields that do not
// apply to a protocol are left at zero.
struct ProtocolSpec {
  Protocol protocol;
  double epsilon;
  int k;
  // GRR/SS/UE: probability that the true value (bit) is reported.
  // LH: GRR probabilities over the hash range.
  double p = 0;
  double q = 0;
  int omega = 0;     // SS subset size
  int g = 0;         // LH hash range
  double b = 0;      // HE Laplace scale
  double theta = 0;  // THE threshold
};

std::string ProtocolName(Protocol protocol);

// Case-insensitive. Returns nullopt for unknown names.
std::optional<Protocol> ParseProtocol(std::string_view name);

// Nearest integer with ties rounded up.
long long RoundHalfUp(double x);

// Throws DomainError when epsilon <= 0, k < 2, or theta lies outside
// (0.5, 1). theta_override only affects THE.
ProtocolSpec ResolveSpec(Protocol protocol, double epsilon, int k,
                         std::optional<double> theta_override = std::nullopt);

// GRR over [0, k) with explicit probabilities; shared by GRR, AGRR and the
// hash-domain step of the LH protocols.
int GrrSample(double p, int k, int v, Rng& rng);

// One-hot encode v and flip bits independently: position v emits 1 with
// probability p, every other position with probability q.
BitVector UeSample(double p, double q, int k, int v, Rng& rng);

Categorical GrrPerturb(const ProtocolSpec& spec, int v, Rng& rng);
Subset SsPerturb(const ProtocolSpec& spec, int v, Rng& rng);
BitVector UePerturb(const ProtocolSpec& spec, int v, Rng& rng);
Hashed LhPerturb(const ProtocolSpec& spec, int v, Rng& rng);
RealVector HePerturb(const ProtocolSpec& spec, int v, Rng& rng);

// Dispatches on spec.protocol.
Report Perturb(const ProtocolSpec& spec, int v, Rng& rng);

// Throws DomainError unless 0 <= v < k.
void CheckValue(int v, int k);

}  // namespace ldp_audit

#endif  // LDP_AUDIT_PROTOCOLS_H_
