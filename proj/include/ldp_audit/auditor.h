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

#ifndef LDP_AUDIT_AUDITOR_H_
#define LDP_AUDIT_AUDITOR_H_

#include <cstdint>
#include <functional>

#include "ldp_audit/mechanism.h"
#include "ldp_audit/rng.h"
#include "ldp_audit/rsfd.h"

namespace ldp_audit {

// Trials are split into blocks of this size; block i draws from
// Rng::ForStream(master_seed, i) whatever the worker count.
inline constexpr int64_t kTrialBlockSize = 4096;

struct AuditConfig {
  int v1 = 0;
  int v2 = 1;
  int64_t trials = 100000;
  double alpha = 0.01;
  uint64_t master_seed = 0;
  int workers = 1;
};

struct AuditOutcome {
  int64_t tp = 0;
  int64_t fp = 0;
  int64_t trials = 0;
  double alpha = 0;
  double delta = 0;
  double p0_hat = 0;
  double p1_hat = 0;
  // NaN when undefined.
  double eps_emp = 0;
  bool undefined = false;
  bool negative = false;
  double eps_theoretical = 0;
  double eps_opt = 0;
  double wall_time_s = 0;
  uint64_t seed = 0;
};

// Per-side tail used for both Clopper-Pearson bounds.
double BoundTail(double alpha);

// Largest value an audit with `trials` trials can report.
double EpsOpt(double alpha, int64_t trials);

// Bounds and eps_emp from raw counts. wall_time_s and seed are left zero.
AuditOutcome Summarize(int64_t tp, int64_t fp, int64_t trials, double alpha,
                       double delta, double eps_theoretical);

// One trial: perturb `v` and return the attack's guess.
using TrialFn = std::function<int(int v, Rng& rng)>;

struct TrialCounts {
  int64_t tp = 0;
  int64_t fp = 0;
};

// TP counts guesses of v1 on input v1, FP counts guesses of v1 on input v2.
TrialCounts RunTrials(const TrialFn& trial, const AuditConfig& config);

// Generic entry point for an arbitrary mechanism/attack pair.
AuditOutcome AuditTrials(const TrialFn& trial, double eps_theoretical,
                         double delta, const AuditConfig& config);

AuditOutcome Audit(const Mechanism& mechanism, const AuditConfig& config);

// Each trial runs the longitudinal attack over tau fresh reports.
AuditOutcome AuditLongitudinal(const Mechanism& mechanism, int tau,
                               const AuditConfig& config);

// Inputs are [v1]*d and [v2]*d. No delta term.
AuditOutcome AuditRsfd(const RsfdSpec& spec, const AuditConfig& config);

AuditOutcome AuditLho(int g, int k, const AuditConfig& config);

}  // namespace ldp_audit

#endif  // LDP_AUDIT_AUDITOR_H_
