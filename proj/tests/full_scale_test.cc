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

// Audits at T = 1e6, the trial count behind the reference values. Slower
// than the unit tests (a few minutes on one core).

#include <cmath>

#include <gtest/gtest.h>
#include "ldp_audit/auditor.h"
#include "ldp_audit/mechanism.h"
#include "ldp_audit/protocols.h"
#include "ldp_audit/rsfd.h"

namespace ldp_audit {
namespace {

constexpr int64_t kTrials = 1000000;

AuditConfig Config(int64_t trials, uint64_t seed) {
  AuditConfig c;
  c.trials = trials;
  c.master_seed = seed;
  return c;
}

double AuditPure(Protocol p, double eps, int k, int64_t trials, uint64_t seed) {
  return Audit(Mechanism::Pure(ResolveSpec(p, eps, k)), Config(trials, seed))
      .eps_emp;
}

TEST(FullScaleTest, GrrReachesItsBudget) {
  const double e = AuditPure(Protocol::kGrr, 2.0, 100, kTrials, 11);
  EXPECT_GE(e, 1.9);
  EXPECT_LE(e, 2.0);
}

TEST(FullScaleTest, BlhStaysFlat) {
  EXPECT_LT(AuditPure(Protocol::kBlh, 2.0, 100, kTrials, 12), 1.0);
}

TEST(FullScaleTest, LongitudinalSueReachesCeiling) {
  const Mechanism m = Mechanism::Pure(ResolveSpec(Protocol::kSue, 1.0, 2));
  const AuditOutcome o = AuditLongitudinal(m, 500, Config(kTrials, 13));
  EXPECT_NEAR(o.eps_emp, EpsOpt(0.01, kTrials), 0.05);
}

TEST(FullScaleTest, LongitudinalGrrGrowsWithRounds) {
  const Mechanism m = Mechanism::Pure(ResolveSpec(Protocol::kGrr, 0.25, 2));
  const double e5 = AuditLongitudinal(m, 5, Config(100000, 14)).eps_emp;
  const double e500 = AuditLongitudinal(m, 500, Config(100000, 15)).eps_emp;
  EXPECT_GT(e500, e5 + 1.0);
}

TEST(FullScaleTest, RsfdPlateau) {
  const auto run = [](double eps, uint64_t seed) {
    return AuditRsfd(ResolveRsfdSpec(RsfdVariant::kGrr, eps, {2, 2}),
                     Config(kTrials, seed))
        .eps_emp;
  };
  const double e6 = run(6.0, 16);
  const double e10 = run(10.0, 17);
  EXPECT_LT(e10, 10.0);
  EXPECT_LT(std::fabs(e6 - e10), 0.5);
}

TEST(FullScaleTest, LhoGrowsWithRangeAndShrinksWithDomain) {
  double prev = -INFINITY;
  for (int g : {2, 4, 6, 8, 10}) {
    const double e = AuditLho(g, 100, Config(kTrials, 18)).eps_emp;
    if (g == 2) {
      EXPECT_LT(e, 1.0);
    }
    EXPECT_GT(e, prev) << "g=" << g;
    prev = e;
  }
  EXPECT_LT(AuditLho(2, 200, Config(kTrials, 19)).eps_emp,
            AuditLho(2, 25, Config(kTrials, 19)).eps_emp);
}

TEST(FullScaleTest, BuggyUeInvisibleAtLargeBudget) {
  const ProtocolSpec s = ResolveSpec(Protocol::kSue, 2.0, 25);
  EXPECT_LT(Audit(Mechanism::BuggyUnaryEncoding(s), Config(kTrials, 20)).eps_emp,
            2.0);
}

}  // namespace
}  // namespace ldp_audit
