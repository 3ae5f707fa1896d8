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

// Approximate (epsilon, delta)-LDP mechanisms: AGRR, ASUE, ABLH, AOLH and
// histogram encoding with Gaussian noise (classical and analytic
// calibration).

#ifndef LDP_AUDIT_APPROX_PROTOCOLS_H_
#define LDP_AUDIT_APPROX_PROTOCOLS_H_

#include <optional>
#include <string>
#include <string_view>

#include "ldp_audit/report.h"
#include "ldp_audit/rng.h"

namespace ldp_audit {

enum class ApproxProtocol { kAgrr, kAsue, kAblh, kAolh, kGm, kAgm };

struct ApproxSpec {
  ApproxProtocol protocol;
  double epsilon;
  double delta;
  int k;
  double p = 0;
  double q = 0;
  int g = 0;
  double sigma = 0;
  // AOLH only: the unrounded closed-form hash range, and whether rounding
  // produced a value below 2 that was clamped.
  double g_closed_form = 0;
  bool g_clamped = false;
};

std::string ApproxProtocolName(ApproxProtocol protocol);
std::optional<ApproxProtocol> ParseApproxProtocol(std::string_view name);

// L2 distance between two one-hot encodings.
inline constexpr double kGaussianSensitivity = 1.4142135623730951;

// Classical Gaussian mechanism scale (Delta2 / eps) * sqrt(2 ln(1.25 / delta)).
// Requires 0 < epsilon <= 1 and 0 < delta < 1.
double GmSigma(double epsilon, double delta);

// Smallest sigma (to relative tolerance 1e-9) for which the Gaussian
// mechanism with L2 sensitivity sqrt(2) meets the exact (epsilon, delta)
// condition
//   Phi(D/(2s) - eps*s/D) - e^eps * Phi(-D/(2s) - eps*s/D) <= delta.
double AgmSigma(double epsilon, double delta);

// Left-hand side of the condition above.
double GaussianMechanismDelta(double epsilon, double sigma);

// Unrounded AOLH hash range. Algebraically equal to
//   (-3e^eps d - sqrt(e^eps - 1) sqrt((1 - d)(e^eps + d - 9e^eps d - 1))
//    + e^eps + 3d - 1) / (2d)
// but rewritten so it stays accurate as d -> 0 (limit e^eps + 1).
double AolhClosedFormRange(double epsilon, double delta);

// Throws DomainError on epsilon <= 0, delta outside [0, 1), k < 2,
// GM with epsilon > 1, GM/AGM with delta = 0, or derived probabilities
// leaving (0, 1).
ApproxSpec ResolveApproxSpec(ApproxProtocol protocol, double epsilon,
                             double delta, int k);

Categorical AgrrPerturb(const ApproxSpec& spec, int v, Rng& rng);
BitVector AsuePerturb(const ApproxSpec& spec, int v, Rng& rng);
Hashed AlhPerturb(const ApproxSpec& spec, int v, Rng& rng);
RealVector GaussHePerturb(const ApproxSpec& spec, int v, Rng& rng);

Report Perturb(const ApproxSpec& spec, int v, Rng& rng);

}  // namespace ldp_audit

#endif  // LDP_AUDIT_APPROX_PROTOCOLS_H_
