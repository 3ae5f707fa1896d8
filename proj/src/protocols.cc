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

#include "ldp_audit/protocols.h"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "ldp_audit/errors.h"
#include "ldp_audit/hashing.h"

namespace ldp_audit {
namespace {

void Require(bool ok, const std::string& protocol_list) {
  if (!ok) throw DomainError("spec is not one of: " + protocol_list);
}

}  // namespace

std::string ProtocolName(Protocol protocol) {
  switch (protocol) {
    case Protocol::kGrr:
      return "grr";
    case Protocol::kSs:
      return "ss";
    case Protocol::kSue:
      return "sue";
    case Protocol::kOue:
      return "oue";
    case Protocol::kBlh:
      return "blh";
    case Protocol::kOlh:
      return "olh";
    case Protocol::kShe:
      return "she";
    case Protocol::kThe:
      return "the";
  }
  return "unknown";
}

std::optional<Protocol> ParseProtocol(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (Protocol p : {Protocol::kGrr, Protocol::kSs, Protocol::kSue,
                     Protocol::kOue, Protocol::kBlh, Protocol::kOlh,
                     Protocol::kShe, Protocol::kThe}) {
    if (ProtocolName(p) == lower) return p;
  }
  return std::nullopt;
}

long long RoundHalfUp(double x) {
  return static_cast<long long>(std::floor(x + 0.5));
}

void CheckValue(int v, int k) {
  if (v < 0 || v >= k) {
    throw DomainError("value " + std::to_string(v) + " outside [0, " +
                      std::to_string(k) + ")");
  }
}

ProtocolSpec ResolveSpec(Protocol protocol, double epsilon, int k,
                         std::optional<double> theta_override) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("epsilon must be positive and finite");
  }
  if (k < 2) throw DomainError("domain size k must be at least 2");
  if (theta_override.has_value() &&
      !(*theta_override > 0.5 && *theta_override < 1.0)) {
    throw DomainError("THE threshold theta must lie in (0.5, 1)");
  }

  ProtocolSpec spec{protocol, epsilon, k};
  const double e = std::exp(epsilon);
  switch (protocol) {
    case Protocol::kGrr:
      spec.p = e / (e + k - 1);
      spec.q = 1.0 / (e + k - 1);
      break;
    case Protocol::kSs: {
      const long long omega = std::max<long long>(1, RoundHalfUp(k / (e + 1)));
      spec.omega = static_cast<int>(std::min<long long>(omega, k));
      const double w = spec.omega;
      spec.p = w * e / (w * e + k - w);
      // Inclusion probability of any value other than the true one.
      spec.q = (spec.p * (w - 1) + (1 - spec.p) * w) / (k - 1);
      break;
    }
    case Protocol::kSue:
      spec.p = std::exp(epsilon / 2) / (std::exp(epsilon / 2) + 1);
      spec.q = 1.0 - spec.p;
      break;
    case Protocol::kOue:
      spec.p = 0.5;
      spec.q = 1.0 / (e + 1);
      break;
    case Protocol::kBlh:
    case Protocol::kOlh: {
      if (protocol == Protocol::kBlh) {
        spec.g = 2;
      } else {
        const double g = std::max(2.0, std::floor(e + 1.0 + 0.5));
        if (g > INT_MAX) throw DomainError("OLH hash range overflows");
        spec.g = static_cast<int>(g);
      }
      spec.p = e / (e + spec.g - 1);
      spec.q = 1.0 / (e + spec.g - 1);
      break;
    }
    case Protocol::kShe:
    case Protocol::kThe:
      spec.b = 2.0 / epsilon;
      if (protocol == Protocol::kThe) {
        spec.theta = theta_override.value_or(kDefaultTheThreshold);
      }
      break;
  }
  return spec;
}

int GrrSample(double p, int k, int v, Rng& rng) {
  if (rng.Uniform01() < p) return v;
  const int other = static_cast<int>(rng.UniformInt(k - 1));
  return other < v ? other : other + 1;
}

BitVector UeSample(double p, double q, int k, int v, Rng& rng) {
  BitVector out;
  out.bits.resize(k);
  for (int i = 0; i < k; ++i) {
    out.bits[i] = rng.Uniform01() < (i == v ? p : q) ? 1 : 0;
  }
  return out;
}

Categorical GrrPerturb(const ProtocolSpec& spec, int v, Rng& rng) {
  Require(spec.protocol == Protocol::kGrr, "grr");
  CheckValue(v, spec.k);
  return {GrrSample(spec.p, spec.k, v, rng), spec.k};
}

// The inclusion of v is decided first; the remaining members are a partial
// Fisher-Yates shuffle of V \ {v}. With omega = 1 this consumes the stream
// exactly like GRR.
Subset SsPerturb(const ProtocolSpec& spec, int v, Rng& rng) {
  Require(spec.protocol == Protocol::kSs, "ss");
  CheckValue(v, spec.k);
  const bool include_true = rng.Uniform01() < spec.p;
  const int draws = include_true ? spec.omega - 1 : spec.omega;

  Subset out{{}, spec.k};
  out.members.reserve(spec.omega);
  if (include_true) out.members.push_back(v);
  if (draws > 0) {
    std::vector<int> pool(spec.k - 1);
    std::iota(pool.begin(), pool.begin() + v, 0);
    std::iota(pool.begin() + v, pool.end(), v + 1);
    const int n = static_cast<int>(pool.size());
    for (int i = 0; i < draws; ++i) {
      const int j = i + static_cast<int>(rng.UniformInt(n - i));
      std::swap(pool[i], pool[j]);
      out.members.push_back(pool[i]);
    }
  }
  return out;
}

BitVector UePerturb(const ProtocolSpec& spec, int v, Rng& rng) {
  Require(spec.protocol == Protocol::kSue || spec.protocol == Protocol::kOue,
          "sue, oue");
  CheckValue(v, spec.k);
  return UeSample(spec.p, spec.q, spec.k, v, rng);
}

Hashed LhPerturb(const ProtocolSpec& spec, int v, Rng& rng) {
  Require(spec.protocol == Protocol::kBlh || spec.protocol == Protocol::kOlh,
          "blh, olh");
  CheckValue(v, spec.k);
  const HashFunction h = NewHash(rng, spec.k, spec.g);
  return {h.seed(), spec.g, GrrSample(spec.p, spec.g, h(v), rng)};
}

RealVector HePerturb(const ProtocolSpec& spec, int v, Rng& rng) {
  Require(spec.protocol == Protocol::kShe || spec.protocol == Protocol::kThe,
          "she, the");
  CheckValue(v, spec.k);
  RealVector out;
  out.values.resize(spec.k);
  for (int i = 0; i < spec.k; ++i) {
    out.values[i] = (i == v ? 1.0 : 0.0) + rng.Laplace(spec.b);
  }
  return out;
}

Report Perturb(const ProtocolSpec& spec, int v, Rng& rng) {
  switch (spec.protocol) {
    case Protocol::kGrr:
      return GrrPerturb(spec, v, rng);
    case Protocol::kSs:
      return SsPerturb(spec, v, rng);
    case Protocol::kSue:
    case Protocol::kOue:
      return UePerturb(spec, v, rng);
    case Protocol::kBlh:
    case Protocol::kOlh:
      return LhPerturb(spec, v, rng);
    case Protocol::kShe:
    case Protocol::kThe:
      return HePerturb(spec, v, rng);
  }
  throw DomainError("unknown protocol");
}

}  // namespace ldp_audit
