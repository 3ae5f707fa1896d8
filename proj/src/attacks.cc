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

#include "ldp_audit/attacks.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ldp_audit/errors.h"
#include "ldp_audit/hashing.h"

namespace ldp_audit {
namespace {

template <typename T>
int ArgmaxImpl(std::span<const T> values, Rng& rng) {
  if (values.empty()) throw DomainError("argmax of an empty range");
  T best = values[0];
  int count = 0;
  for (const T& x : values) {
    if (x > best) {
      best = x;
      count = 1;
    } else if (x == best) {
      ++count;
    }
  }
  int pick = count == 1 ? 0 : static_cast<int>(rng.UniformInt(count));
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] == best && pick-- == 0) return static_cast<int>(i);
  }
  return 0;  // unreachable
}

template <typename Variant>
const Variant& Expect(const Report& report, const char* family) {
  const auto* r = std::get_if<Variant>(&report);
  if (r == nullptr) {
    throw ReportMismatchError(std::string(family) + " attack cannot use a " +
                              ReportKindName(report) + " report");
  }
  return *r;
}

std::vector<double> LogPrior(std::span<const double> prior, size_t k) {
  if (prior.empty()) return std::vector<double>(k, 0.0);
  if (prior.size() != k) throw DomainError("prior length differs from k");
  double total = 0.0;
  for (double w : prior) {
    if (!(w >= 0.0)) throw DomainError("prior has a negative entry");
    total += w;
  }
  if (total == 0.0) throw DomainError("prior is the zero vector");
  if (std::fabs(total - 1.0) > 1e-9) throw DomainError("prior does not sum to 1");
  std::vector<double> out(k);
  for (size_t i = 0; i < k; ++i) out[i] = std::log(prior[i]);
  return out;
}

// Unnormalized log posteriors, up to a common additive constant.
std::vector<double> LaplaceScores(std::span<const double> y, double b,
                                  std::span<const double> prior) {
  if (!(b > 0.0)) throw DomainError("Laplace scale must be positive");
  std::vector<double> scores = LogPrior(prior, y.size());
  // |y - e_v|_1 = sum_i |y_i| - |y_v| + |y_v - 1|; the sum is shared.
  for (size_t v = 0; v < y.size(); ++v) {
    scores[v] -= (std::fabs(y[v] - 1.0) - std::fabs(y[v])) / b;
  }
  return scores;
}

std::vector<double> GaussianScores(std::span<const double> y, double sigma,
                                   std::span<const double> prior) {
  if (!(sigma > 0.0)) throw DomainError("Gaussian sigma must be positive");
  std::vector<double> scores = LogPrior(prior, y.size());
  // |y - e_v|_2^2 = sum_i y_i^2 - 2 y_v + 1.
  const double inv_var = 1.0 / (sigma * sigma);
  for (size_t v = 0; v < y.size(); ++v) scores[v] += y[v] * inv_var;
  return scores;
}

std::vector<double> Normalize(std::vector<double> log_weights) {
  const double top = *std::max_element(log_weights.begin(), log_weights.end());
  double total = 0.0;
  for (double& w : log_weights) {
    w = std::exp(w - top);
    total += w;
  }
  for (double& w : log_weights) w /= total;
  return log_weights;
}

}  // namespace

AttackFamily AttackFamilyOf(Protocol protocol) {
  switch (protocol) {
    case Protocol::kGrr:
      return AttackFamily::kGrr;
    case Protocol::kSs:
      return AttackFamily::kSs;
    case Protocol::kSue:
    case Protocol::kOue:
      return AttackFamily::kUe;
    case Protocol::kBlh:
    case Protocol::kOlh:
      return AttackFamily::kLh;
    case Protocol::kShe:
      return AttackFamily::kShe;
    case Protocol::kThe:
      return AttackFamily::kThe;
  }
  throw DomainError("unknown protocol");
}

AttackFamily AttackFamilyOf(ApproxProtocol protocol) {
  switch (protocol) {
    case ApproxProtocol::kAgrr:
      return AttackFamily::kGrr;
    case ApproxProtocol::kAsue:
      return AttackFamily::kUe;
    case ApproxProtocol::kAblh:
    case ApproxProtocol::kAolh:
      return AttackFamily::kLh;
    case ApproxProtocol::kGm:
    case ApproxProtocol::kAgm:
      return AttackFamily::kGaussian;
  }
  throw DomainError("unknown protocol");
}

bool HasSupportSet(AttackFamily family) {
  return family != AttackFamily::kShe && family != AttackFamily::kGaussian;
}

SupportSet BuildSupport(AttackFamily family, const Report& report, int k,
                        std::optional<double> theta) {
  SupportSet support;
  switch (family) {
    case AttackFamily::kGrr: {
      const auto& r = Expect<Categorical>(report, "GRR");
      CheckValue(r.value, k);
      support.members.push_back(r.value);
      break;
    }
    case AttackFamily::kSs: {
      const auto& r = Expect<Subset>(report, "SS");
      support.members = r.members;
      std::sort(support.members.begin(), support.members.end());
      break;
    }
    case AttackFamily::kUe: {
      const auto& r = Expect<BitVector>(report, "UE");
      if (static_cast<int>(r.bits.size()) != k) {
        throw ReportMismatchError("UE report length differs from k");
      }
      for (int v = 0; v < k; ++v) {
        if (r.bits[v]) support.members.push_back(v);
      }
      break;
    }
    case AttackFamily::kLh: {
      const auto& r = Expect<Hashed>(report, "LH");
      const HashFunction h = HashFunction::FromSeed(r.hash_seed, r.g);
      for (int v = 0; v < k; ++v) {
        if (h(v) == r.value) support.members.push_back(v);
      }
      break;
    }
    case AttackFamily::kThe: {
      if (!theta.has_value()) throw DomainError("THE support needs theta");
      const auto& r = Expect<RealVector>(report, "THE");
      if (static_cast<int>(r.values.size()) != k) {
        throw ReportMismatchError("THE report length differs from k");
      }
      for (int v = 0; v < k; ++v) {
        if (r.values[v] > *theta) support.members.push_back(v);
      }
      break;
    }
    case AttackFamily::kShe:
    case AttackFamily::kGaussian:
      throw DomainError("histogram-encoding Bayes attacks have no support set");
  }
  return support;
}

AttackPrediction UniformSupportAttack(const SupportSet& support, int k,
                                      Rng& rng) {
  if (k < 1) throw DomainError("domain size must be positive");
  const auto& m = support.members;
  if (m.empty()) return {static_cast<int>(rng.UniformInt(k)), true};
  if (m.size() == 1) return {m.front(), false};
  return {m[rng.UniformInt(m.size())], false};
}

int ArgmaxUniformTies(std::span<const double> values, Rng& rng) {
  return ArgmaxImpl(values, rng);
}

int ArgmaxUniformTies(std::span<const int> values, Rng& rng) {
  return ArgmaxImpl(values, rng);
}

std::vector<double> LaplacePosterior(std::span<const double> y, double b,
                                     std::span<const double> prior) {
  return Normalize(LaplaceScores(y, b, prior));
}

std::vector<double> GaussianPosterior(std::span<const double> y, double sigma,
                                      std::span<const double> prior) {
  return Normalize(GaussianScores(y, sigma, prior));
}

AttackPrediction BayesAttackLaplace(std::span<const double> y, double b,
                                    Rng& rng, std::span<const double> prior) {
  const std::vector<double> scores = LaplaceScores(y, b, prior);
  return {ArgmaxUniformTies(scores, rng), false};
}

AttackPrediction BayesAttackGaussian(std::span<const double> y, double sigma,
                                     Rng& rng, std::span<const double> prior) {
  const std::vector<double> scores = GaussianScores(y, sigma, prior);
  return {ArgmaxUniformTies(scores, rng), false};
}

AttackPrediction LongitudinalAttack(const PerturbFn& perturb,
                                    AttackFamily family, int v, int tau, int k,
                                    Rng& rng, std::optional<double> theta) {
  if (tau < 1) throw DomainError("tau must be at least 1");
  if (!HasSupportSet(family)) {
    throw DomainError(
        "support-count averaging does not apply to SHE/GM/AGM; use "
        "LongitudinalAttackHe");
  }
  std::vector<int> counts(k, 0);
  for (int t = 0; t < tau; ++t) {
    const SupportSet support = BuildSupport(family, perturb(v, rng), k, theta);
    for (int member : support.members) ++counts[member];
  }
  return {ArgmaxUniformTies(counts, rng), false};
}

AttackPrediction LongitudinalAttackHe(const PerturbFn& perturb, int v, int tau,
                                      int k, Rng& rng) {
  if (tau < 1) throw DomainError("tau must be at least 1");
  std::vector<double> sum(k, 0.0);
  for (int t = 0; t < tau; ++t) {
    const Report report = perturb(v, rng);
    const auto* y = std::get_if<RealVector>(&report);
    if (y == nullptr || static_cast<int>(y->values.size()) != k) {
      throw ReportMismatchError("summation attack needs length-k real vectors");
    }
    for (int i = 0; i < k; ++i) sum[i] += y->values[i];
  }
  return {ArgmaxUniformTies(sum, rng), false};
}

}  // namespace ldp_audit
