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

#include "ldp_audit/approx_protocols.h"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cmath>
#include <string>

#include "ldp_audit/errors.h"
#include "ldp_audit/hashing.h"
#include "ldp_audit/protocols.h"

namespace ldp_audit {
namespace {

constexpr double kAgmRelativeTolerance = 1e-9;

double StandardNormalCdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

void CheckProbabilities(const ApproxSpec& spec) {
  if (!(spec.p > 0 && spec.p < 1 && spec.q > 0 && spec.q < 1 &&
        spec.q < spec.p)) {
    throw DomainError(ApproxProtocolName(spec.protocol) +
                      ": derived probabilities leave (0, 1) for epsilon=" +
                      std::to_string(spec.epsilon) +
                      " delta=" + std::to_string(spec.delta));
  }
}

void Require(bool ok, const std::string& protocol_list) {
  if (!ok) throw DomainError("spec is not one of: " + protocol_list);
}

}  // namespace

std::string ApproxProtocolName(ApproxProtocol protocol) {
  switch (protocol) {
    case ApproxProtocol::kAgrr:
      return "agrr";
    case ApproxProtocol::kAsue:
      return "asue";
    case ApproxProtocol::kAblh:
      return "ablh";
    case ApproxProtocol::kAolh:
      return "aolh";
    case ApproxProtocol::kGm:
      return "gm";
    case ApproxProtocol::kAgm:
      return "agm";
  }
  return "unknown";
}

std::optional<ApproxProtocol> ParseApproxProtocol(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (ApproxProtocol p :
       {ApproxProtocol::kAgrr, ApproxProtocol::kAsue, ApproxProtocol::kAblh,
        ApproxProtocol::kAolh, ApproxProtocol::kGm, ApproxProtocol::kAgm}) {
    if (ApproxProtocolName(p) == lower) return p;
  }
  return std::nullopt;
}

double GmSigma(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw DomainError("GM requires epsilon in (0, 1]");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("GM requires delta in (0, 1)");
  }
  return kGaussianSensitivity / epsilon *
         std::sqrt(2.0 * std::log(1.25 / delta));
}

double GaussianMechanismDelta(double epsilon, double sigma) {
  const double a = kGaussianSensitivity / (2.0 * sigma);
  const double b = epsilon * sigma / kGaussianSensitivity;
  return StandardNormalCdf(a - b) - std::exp(epsilon) * StandardNormalCdf(-a - b);
}

double AgmSigma(double epsilon, double delta) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("AGM requires epsilon > 0");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("AGM requires delta in (0, 1)");
  }
  // The privacy-loss delta is decreasing in sigma. Bracket, then bisect.
  double hi = kGaussianSensitivity;
  while (GaussianMechanismDelta(epsilon, hi) > delta) hi *= 2.0;
  double lo = hi;
  while (GaussianMechanismDelta(epsilon, lo) <= delta) lo /= 2.0;
  while (hi - lo > kAgmRelativeTolerance * hi) {
    const double mid = 0.5 * (lo + hi);
    if (GaussianMechanismDelta(epsilon, mid) > delta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

// With E = e^eps, A = (E - 1)(1 - 3d) and B = (E - 1)(1 - d)(E - 1 + d - 9Ed)
// the closed form is (A - sqrt(B)) / (2d), and A^2 - B = 4d(E - 1)(E + 1 - 2d).
double AolhClosedFormRange(double epsilon, double delta) {
  const double em1 = std::expm1(epsilon);
  const double e = em1 + 1.0;
  const double a = em1 * (1.0 - 3.0 * delta);
  const double b = em1 * (1.0 - delta) * (em1 + delta - 9.0 * e * delta);
  if (b < 0.0) {
    throw DomainError("AOLH closed-form hash range is undefined for epsilon=" +
                      std::to_string(epsilon) +
                      " delta=" + std::to_string(delta));
  }
  return 2.0 * em1 * (e + 1.0 - 2.0 * delta) / (a + std::sqrt(b));
}

ApproxSpec ResolveApproxSpec(ApproxProtocol protocol, double epsilon,
                             double delta, int k) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("epsilon must be positive and finite");
  }
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw DomainError("delta must lie in [0, 1)");
  }
  if (k < 2) throw DomainError("domain size k must be at least 2");

  ApproxSpec spec{protocol, epsilon, delta, k};
  const double e = std::exp(epsilon);
  switch (protocol) {
    case ApproxProtocol::kAgrr:
      spec.p = (e + (k - 1) * delta) / (e + k - 1);
      spec.q = (1.0 - delta) / (e + k - 1);
      break;
    case ApproxProtocol::kAsue:
      if (delta == 0.0) {
        const ProtocolSpec pure = ResolveSpec(Protocol::kSue, epsilon, k);
        spec.p = pure.p;
        spec.q = pure.q;
      } else {
        const double root = std::sqrt(e * (1.0 - delta) + delta);
        spec.p = (e - root) / (e - 1.0);
        spec.q = (root - 1.0) / (e - 1.0);
      }
      break;
    case ApproxProtocol::kAblh:
    case ApproxProtocol::kAolh:
      if (protocol == ApproxProtocol::kAblh) {
        spec.g = 2;
      } else if (delta == 0.0) {
        spec.g = ResolveSpec(Protocol::kOlh, epsilon, k).g;
        spec.g_closed_form = e + 1.0;
      } else {
        spec.g_closed_form = AolhClosedFormRange(epsilon, delta);
        const double rounded = std::floor(spec.g_closed_form + 0.5);
        if (rounded > INT_MAX) throw DomainError("AOLH hash range overflows");
        spec.g_clamped = rounded < 2.0;
        spec.g = static_cast<int>(std::max(2.0, rounded));
      }
      spec.p = (e + (spec.g - 1) * delta) / (e + spec.g - 1);
      spec.q = (1.0 - delta) / (e + spec.g - 1);
      break;
    case ApproxProtocol::kGm:
      if (epsilon > 1.0) throw DomainError("GM requires epsilon <= 1");
      if (delta == 0.0) throw DomainError("GM requires delta > 0");
      spec.sigma = GmSigma(epsilon, delta);
      return spec;
    case ApproxProtocol::kAgm:
      if (delta == 0.0) throw DomainError("AGM requires delta > 0");
      spec.sigma = AgmSigma(epsilon, delta);
      return spec;
  }
  CheckProbabilities(spec);
  return spec;
}

Categorical AgrrPerturb(const ApproxSpec& spec, int v, Rng& rng) {
  Require(spec.protocol == ApproxProtocol::kAgrr, "agrr");
  CheckValue(v, spec.k);
  return {GrrSample(spec.p, spec.k, v, rng), spec.k};
}

BitVector AsuePerturb(const ApproxSpec& spec, int v, Rng& rng) {
  Require(spec.protocol == ApproxProtocol::kAsue, "asue");
  CheckValue(v, spec.k);
  return UeSample(spec.p, spec.q, spec.k, v, rng);
}

Hashed AlhPerturb(const ApproxSpec& spec, int v, Rng& rng) {
  Require(spec.protocol == ApproxProtocol::kAblh ||
              spec.protocol == ApproxProtocol::kAolh,
          "ablh, aolh");
  CheckValue(v, spec.k);
  const HashFunction h = NewHash(rng, spec.k, spec.g);
  return {h.seed(), spec.g, GrrSample(spec.p, spec.g, h(v), rng)};
}

RealVector GaussHePerturb(const ApproxSpec& spec, int v, Rng& rng) {
  Require(spec.protocol == ApproxProtocol::kGm ||
              spec.protocol == ApproxProtocol::kAgm,
          "gm, agm");
  CheckValue(v, spec.k);
  RealVector out;
  out.values.resize(spec.k);
  for (int i = 0; i < spec.k; ++i) {
    out.values[i] = (i == v ? 1.0 : 0.0) + rng.Gaussian(spec.sigma);
  }
  return out;
}

Report Perturb(const ApproxSpec& spec, int v, Rng& rng) {
  switch (spec.protocol) {
    case ApproxProtocol::kAgrr:
      return AgrrPerturb(spec, v, rng);
    case ApproxProtocol::kAsue:
      return AsuePerturb(spec, v, rng);
    case ApproxProtocol::kAblh:
    case ApproxProtocol::kAolh:
      return AlhPerturb(spec, v, rng);
    case ApproxProtocol::kGm:
    case ApproxProtocol::kAgm:
      return GaussHePerturb(spec, v, rng);
  }
  throw DomainError("unknown protocol");
}

}  // namespace ldp_audit
