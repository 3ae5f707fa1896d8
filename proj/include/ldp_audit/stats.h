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

// Exact binomial confidence statistics: the regularized incomplete beta
// function, its inverse in x, and Clopper-Pearson bounds built on them.

#ifndef LDP_AUDIT_STATS_H_
#define LDP_AUDIT_STATS_H_

#include <cstdint>

namespace ldp_audit {

enum class BoundSide { kLower, kUpper };

// One side of a Clopper-Pearson interval. `tail` is the probability mass
// allocated to this side only.
struct ConfidenceBound {
  double value;
  BoundSide side;
  int64_t successes;
  int64_t trials;
  double tail;
};

// I_x(a, b). Throws DomainError unless a > 0, b > 0 and 0 <= x <= 1.
double RegularizedIncompleteBeta(double a, double b, double x);

// Returns q with |I_q(a, b) - p| < 1e-10. Throws DomainError unless
// 0 < p < 1, a > 0, b > 0; throws ConvergenceError if the root search fails.
double BetaQuantile(double p, double a, double b);

// Lower Clopper-Pearson bound for `successes` out of `trials`:
// 0 when successes == 0, else BetaQuantile(tail, x, T - x + 1).
// Callers pass the per-side tail; this function never splits alpha.
double ClopperPearsonLower(int64_t successes, int64_t trials, double tail);

// Upper bound: 1 when successes == trials, else
// BetaQuantile(1 - tail, x + 1, T - x).
double ClopperPearsonUpper(int64_t successes, int64_t trials, double tail);

ConfidenceBound MakeConfidenceBound(BoundSide side, int64_t successes,
                                    int64_t trials, double tail);

}  // namespace ldp_audit

#endif  // LDP_AUDIT_STATS_H_
