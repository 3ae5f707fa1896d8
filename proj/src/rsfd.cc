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

#include "ldp_audit/rsfd.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "ldp_audit/errors.h"

namespace ldp_audit {
namespace {

Protocol BaseProtocol(RsfdVariant variant) {
  switch (variant) {
    case RsfdVariant::kGrr:
      return Protocol::kGrr;
    case RsfdVariant::kSueZ:
    case RsfdVariant::kSueR:
      return Protocol::kSue;
    case RsfdVariant::kOueZ:
    case RsfdVariant::kOueR:
      return Protocol::kOue;
  }
  throw DomainError("unknown RS+FD variant");
}

Report FakeReport(RsfdVariant variant, const ProtocolSpec& base, Rng& rng) {
  switch (variant) {
    case RsfdVariant::kGrr:
      return Categorical{static_cast<int>(rng.UniformInt(base.k)), base.k};
    case RsfdVariant::kSueZ:
    case RsfdVariant::kOueZ: {
      BitVector out;
      out.bits.resize(base.k);
      for (int i = 0; i < base.k; ++i) out.bits[i] = rng.Bernoulli(base.q);
      return out;
    }
    case RsfdVariant::kSueR:
    case RsfdVariant::kOueR: {
      const int one_hot = static_cast<int>(rng.UniformInt(base.k));
      return UeSample(base.p, base.q, base.k, one_hot, rng);
    }
  }
  throw DomainError("unknown RS+FD variant");
}

}  // namespace

std::string RsfdVariantName(RsfdVariant variant) {
  switch (variant) {
    case RsfdVariant::kGrr:
      return "grr";
    case RsfdVariant::kSueZ:
      return "sue-z";
    case RsfdVariant::kSueR:
      return "sue-r";
    case RsfdVariant::kOueZ:
      return "oue-z";
    case RsfdVariant::kOueR:
      return "oue-r";
  }
  return "unknown";
}

std::optional<RsfdVariant> ParseRsfdVariant(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (RsfdVariant v : {RsfdVariant::kGrr, RsfdVariant::kSueZ,
                        RsfdVariant::kSueR, RsfdVariant::kOueZ,
                        RsfdVariant::kOueR}) {
    if (RsfdVariantName(v) == lower) return v;
  }
  return std::nullopt;
}

double AmplifiedEpsilon(double epsilon, int d) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("epsilon must be positive and finite");
  }
  if (d < 1) throw DomainError("attribute count d must be at least 1");
  if (d == 1) return epsilon;
  return std::log1p(d * std::expm1(epsilon));
}

RsfdSpec ResolveRsfdSpec(RsfdVariant variant, double epsilon,
                         std::vector<int> k_vec) {
  if (k_vec.empty()) throw DomainError("RS+FD needs at least one attribute");
  RsfdSpec spec{variant, epsilon, static_cast<int>(k_vec.size()),
                std::move(k_vec), 0.0, {}};
  spec.epsilon_amp = AmplifiedEpsilon(epsilon, spec.d);
  spec.base.reserve(spec.d);
  for (int k : spec.k_vec) {
    spec.base.push_back(ResolveSpec(BaseProtocol(variant), spec.epsilon_amp, k));
  }
  return spec;
}

RsfdReport RsfdPerturb(const RsfdSpec& spec, std::span<const int> values,
                       Rng& rng) {
  if (static_cast<int>(values.size()) != spec.d) {
    throw DomainError("RS+FD input has " + std::to_string(values.size()) +
                      " attributes, spec has " + std::to_string(spec.d));
  }
  for (int j = 0; j < spec.d; ++j) CheckValue(values[j], spec.k_vec[j]);

  const int sampled = static_cast<int>(rng.UniformInt(spec.d));
  RsfdReport out;
  out.per_attribute.reserve(spec.d);
  for (int j = 0; j < spec.d; ++j) {
    if (j == sampled) {
      out.per_attribute.push_back(Perturb(spec.base[j], values[j], rng));
    } else {
      out.per_attribute.push_back(FakeReport(spec.variant, spec.base[j], rng));
    }
  }
  return out;
}

RsfdPrediction RsfdAttack(const RsfdSpec& spec, const RsfdReport& report,
                          Rng& rng) {
  if (static_cast<int>(report.per_attribute.size()) != spec.d) {
    throw DomainError("RS+FD report has the wrong number of attributes");
  }
  const int guess = static_cast<int>(rng.UniformInt(spec.d));
  const ProtocolSpec& base = spec.base[guess];
  const SupportSet support = BuildSupport(AttackFamilyOf(base.protocol),
                                          report.per_attribute[guess], base.k);
  return {guess, UniformSupportAttack(support, base.k, rng)};
}

}  // namespace ldp_audit
