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

// Distinguishability attacks: given one report (or tau reports) of a user's
// value, predict the value.

#ifndef LDP_AUDIT_ATTACKS_H_
#define LDP_AUDIT_ATTACKS_H_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ldp_audit/approx_protocols.h"
#include "ldp_audit/protocols.h"
#include "ldp_audit/report.h"
#include "ldp_audit/rng.h"

namespace ldp_audit {

// Protocols that share an attack. Approximate variants attack like their
// pure counterparts.
enum class AttackFamily {
  kGrr,       // support {y}
  kSs,        // support Omega
  kUe,        // support {v : y_v = 1}
  kLh,        // support {v : H(v) = y}
  kThe,       // support {v : y_v > theta}
  kShe,       // Bayes attack, Laplace likelihood
  kGaussian,  // Bayes attack, Gaussian likelihood
};

AttackFamily AttackFamilyOf(Protocol protocol);
AttackFamily AttackFamilyOf(ApproxProtocol protocol);

// True for families whose attack goes through a support set.
bool HasSupportSet(AttackFamily family);

struct SupportSet {
  std::vector<int> members;  // ascending, within [0, k)
};

struct AttackPrediction {
  int value;
  bool used_fallback = false;  // support was empty, guessed uniformly on [k]
};

// Throws ReportMismatchError when the report variant does not belong to the
// family, and DomainError for the Bayes families (they have no support set)
// or for THE without a threshold.
SupportSet BuildSupport(AttackFamily family, const Report& report, int k,
                        std::optional<double> theta = std::nullopt);

// Uniform over the support, or over [0, k) when it is empty. A singleton
// support does not consume randomness.
AttackPrediction UniformSupportAttack(const SupportSet& support, int k,
                                      Rng& rng);

// Index of a maximal element, uniformly among ties. Consumes randomness only
// when there is more than one maximizer.
int ArgmaxUniformTies(std::span<const double> values, Rng& rng);
int ArgmaxUniformTies(std::span<const int> values, Rng& rng);

// Posterior over candidate values under Laplace(b) noise on a one-hot
// encoding. An empty prior means uniform. Throws DomainError for b <= 0 or a
// prior that is not a length-k probability vector.
std::vector<double> LaplacePosterior(std::span<const double> y, double b,
                                     std::span<const double> prior = {});

// Posterior under N(0, sigma^2) noise.
std::vector<double> GaussianPosterior(std::span<const double> y, double sigma,
                                      std::span<const double> prior = {});

// Maximum a posteriori value with uniform tie-breaking.
AttackPrediction BayesAttackLaplace(std::span<const double> y, double b,
                                    Rng& rng,
                                    std::span<const double> prior = {});
AttackPrediction BayesAttackGaussian(std::span<const double> y, double sigma,
                                     Rng& rng,
                                     std::span<const double> prior = {});

using PerturbFn = std::function<Report(int value, Rng& rng)>;

// Averaging attack over tau fresh reports of v: counts how often each value
// lands in the support set and returns the most frequent one. Throws
// DomainError for tau < 1 or a Bayes family.
AttackPrediction LongitudinalAttack(const PerturbFn& perturb,
                                    AttackFamily family, int v, int tau, int k,
                                    Rng& rng,
                                    std::optional<double> theta = std::nullopt);

// argmax of the coordinatewise sum of tau real-vector reports.
AttackPrediction LongitudinalAttackHe(const PerturbFn& perturb, int v, int tau,
                                      int k, Rng& rng);

}  // namespace ldp_audit

#endif  // LDP_AUDIT_ATTACKS_H_
