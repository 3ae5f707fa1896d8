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

#include "ldp_audit/mechanism.h"

#include <limits>

#include "ldp_audit/errors.h"
#include "ldp_audit/hashing.h"

namespace ldp_audit {

Hashed LhoPerturb(const LhoSpec& spec, int v, Rng& rng) {
  CheckValue(v, spec.k);
  const HashFunction h = NewHash(rng, spec.k, spec.g);
  return {h.seed(), spec.g, h(v)};
}

BitVector BuggyUePerturb(const ProtocolSpec& spec, int v, Rng& rng) {
  if (spec.protocol != Protocol::kSue && spec.protocol != Protocol::kOue) {
    throw DomainError("buggy UE needs a SUE or OUE spec");
  }
  CheckValue(v, spec.k);
  BitVector out;
  out.bits.resize(spec.k);
  for (int i = 0; i < spec.k; ++i) out.bits[i] = rng.Bernoulli(spec.q);
  if (rng.Bernoulli(spec.p)) out.bits[v] = 1;
  return out;
}

Mechanism Mechanism::LocalHashingOnly(int k, int g) {
  if (k < 2) throw DomainError("domain size k must be at least 2");
  if (g < 2) throw DomainError("hash range g must be at least 2");
  return Mechanism(LhoSpec{k, g});
}

Mechanism Mechanism::BuggyUnaryEncoding(const ProtocolSpec& spec) {
  if (spec.protocol != Protocol::kSue && spec.protocol != Protocol::kOue) {
    throw DomainError("buggy UE needs a SUE or OUE spec");
  }
  return Mechanism(BuggyUeSpec{spec});
}

Report Mechanism::Perturb(int v, Rng& rng) const {
  struct Visitor {
    int v;
    Rng& rng;
    Report operator()(const ProtocolSpec& s) { return ldp_audit::Perturb(s, v, rng); }
    Report operator()(const ApproxSpec& s) { return ldp_audit::Perturb(s, v, rng); }
    Report operator()(const LhoSpec& s) { return LhoPerturb(s, v, rng); }
    Report operator()(const BuggyUeSpec& s) { return BuggyUePerturb(s.ue, v, rng); }
  };
  return std::visit(Visitor{v, rng}, spec_);
}

AttackPrediction Mechanism::Attack(const Report& report, Rng& rng) const {
  const AttackFamily f = family();
  if (f == AttackFamily::kShe || f == AttackFamily::kGaussian) {
    const auto* y = std::get_if<RealVector>(&report);
    if (y == nullptr) {
      throw ReportMismatchError("Bayes attack needs a real-vector report");
    }
    return f == AttackFamily::kShe
               ? BayesAttackLaplace(y->values, noise_scale(), rng)
               : BayesAttackGaussian(y->values, noise_scale(), rng);
  }
  return UniformSupportAttack(BuildSupport(f, report, k(), theta()), k(), rng);
}

AttackFamily Mechanism::family() const {
  struct Visitor {
    AttackFamily operator()(const ProtocolSpec& s) { return AttackFamilyOf(s.protocol); }
    AttackFamily operator()(const ApproxSpec& s) { return AttackFamilyOf(s.protocol); }
    AttackFamily operator()(const LhoSpec&) { return AttackFamily::kLh; }
    AttackFamily operator()(const BuggyUeSpec&) { return AttackFamily::kUe; }
  };
  return std::visit(Visitor{}, spec_);
}

int Mechanism::k() const {
  struct Visitor {
    int operator()(const ProtocolSpec& s) { return s.k; }
    int operator()(const ApproxSpec& s) { return s.k; }
    int operator()(const LhoSpec& s) { return s.k; }
    int operator()(const BuggyUeSpec& s) { return s.ue.k; }
  };
  return std::visit(Visitor{}, spec_);
}

double Mechanism::epsilon() const {
  struct Visitor {
    double operator()(const ProtocolSpec& s) { return s.epsilon; }
    double operator()(const ApproxSpec& s) { return s.epsilon; }
    double operator()(const LhoSpec&) { return std::numeric_limits<double>::infinity(); }
    double operator()(const BuggyUeSpec& s) { return s.ue.epsilon; }
  };
  return std::visit(Visitor{}, spec_);
}

double Mechanism::delta() const {
  if (const auto* s = std::get_if<ApproxSpec>(&spec_)) return s->delta;
  return 0.0;
}

std::optional<double> Mechanism::theta() const {
  if (const auto* s = std::get_if<ProtocolSpec>(&spec_)) {
    if (s->protocol == Protocol::kThe) return s->theta;
  }
  return std::nullopt;
}

double Mechanism::noise_scale() const {
  if (const auto* s = std::get_if<ProtocolSpec>(&spec_)) return s->b;
  if (const auto* s = std::get_if<ApproxSpec>(&spec_)) return s->sigma;
  return 0.0;
}

int Mechanism::hash_range() const {
  if (const auto* s = std::get_if<ProtocolSpec>(&spec_)) return s->g;
  if (const auto* s = std::get_if<ApproxSpec>(&spec_)) return s->g;
  if (const auto* s = std::get_if<LhoSpec>(&spec_)) return s->g;
  return 0;
}

std::string Mechanism::name() const {
  struct Visitor {
    std::string operator()(const ProtocolSpec& s) { return ProtocolName(s.protocol); }
    std::string operator()(const ApproxSpec& s) { return ApproxProtocolName(s.protocol); }
    std::string operator()(const LhoSpec&) { return "lho"; }
    std::string operator()(const BuggyUeSpec& s) {
      return ProtocolName(s.ue.protocol) + "-buggy";
    }
  };
  return std::visit(Visitor{}, spec_);
}

}  // namespace ldp_audit
