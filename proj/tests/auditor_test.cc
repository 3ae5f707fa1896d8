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

#include "ldp_audit/auditor.h"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>
#include "ldp_audit/approx_protocols.h"
#include "ldp_audit/errors.h"
#include "ldp_audit/hashing.h"
#include "ldp_audit/mechanism.h"
#include "ldp_audit/protocols.h"
#include "ldp_audit/stats.h"
#include "oracles.h"

namespace ldp_audit {
namespace {

using testing::StdErr;

AuditConfig Config(int64_t trials, uint64_t seed, int workers = 1) {
  AuditConfig c;
  c.trials = trials;
  c.master_seed = seed;
  c.workers = workers;
  return c;
}

TEST(EpsOptTest, KnownValues) {
  EXPECT_NEAR(EpsOpt(0.01, 10000), 7.42, 0.01);
  EXPECT_NEAR(EpsOpt(0.01, 1000000), 12.025, 0.005);
}

TEST(EpsOptTest, IncreasingInTrials) {
  double prev = 0;
  for (int64_t t : {1000, 10000, 100000, 1000000}) {
    const double e = EpsOpt(0.01, t);
    EXPECT_GT(e, prev);
    prev = e;
  }
}

TEST(EpsOptTest, EqualsSummaryOfPerfectCounts) {
  const AuditOutcome o = Summarize(5000, 0, 5000, 0.05, 0.0, 1.0);
  EXPECT_EQ(o.eps_emp, EpsOpt(0.05, 5000));
  EXPECT_THROW(EpsOpt(0.0, 10), DomainError);
  EXPECT_THROW(EpsOpt(0.01, 0), DomainError);
}

TEST(SummarizeTest, UsesClopperPearsonBounds) {
  const AuditOutcome o = Summarize(700, 100, 1000, 0.01, 0.0, 2.0);
  EXPECT_EQ(o.p0_hat, ClopperPearsonLower(700, 1000, BoundTail(0.01)));
  EXPECT_EQ(o.p1_hat, ClopperPearsonUpper(100, 1000, BoundTail(0.01)));
  EXPECT_DOUBLE_EQ(o.eps_emp, std::log(o.p0_hat / o.p1_hat));
  EXPECT_FALSE(o.undefined);
  EXPECT_FALSE(o.negative);
}

TEST(SummarizeTest, SubtractsDelta) {
  const AuditOutcome o = Summarize(700, 100, 1000, 0.01, 0.05, 2.0);
  EXPECT_DOUBLE_EQ(o.eps_emp, std::log((o.p0_hat - 0.05) / o.p1_hat));
}

TEST(SummarizeTest, FlagsUndefinedWhenLowerBoundBelowDelta) {
  const AuditOutcome o = Summarize(10, 10, 1000, 0.01, 0.2, 1.0);
  EXPECT_TRUE(o.undefined);
  EXPECT_TRUE(std::isnan(o.eps_emp));
  EXPECT_EQ(o.tp, 10);
}

TEST(SummarizeTest, ReportsNegativeEstimatesAsIs) {
  const AuditOutcome o = Summarize(100, 300, 1000, 0.01, 0.0, 1.0);
  EXPECT_LT(o.eps_emp, 0.0);
  EXPECT_TRUE(o.negative);
}

TEST(SummarizeTest, NeverExceedsCeiling) {
  Rng rng(1);
  for (int i = 0; i < 2000; ++i) {
    const int64_t t = 1 + static_cast<int64_t>(rng.UniformInt(5000));
    const int64_t tp = static_cast<int64_t>(rng.UniformInt(t + 1));
    const int64_t fp = static_cast<int64_t>(rng.UniformInt(t + 1));
    const AuditOutcome o = Summarize(tp, fp, t, 0.01, 0.0, 1.0);
    if (o.undefined) {
      ASSERT_TRUE(std::isnan(o.eps_emp));
      continue;
    }
    ASSERT_LE(o.eps_emp, o.eps_opt + 1e-12) << tp << " " << fp << " " << t;
  }
}

TEST(AuditTest, IndistinguishableMechanismGivesZero) {
  const TrialFn constant = [](int, Rng&) { return 0; };
  const AuditOutcome o = AuditTrials(constant, 1.0, 0.0, Config(10000, 2));
  EXPECT_EQ(o.tp, 10000);
  EXPECT_EQ(o.fp, 10000);
  EXPECT_NEAR(o.eps_emp, 0.0, 1e-3);
}

TEST(AuditTest, GrrCountsMatchClosedForm) {
  for (double eps : {0.5, 2.0}) {
    for (int k : {2, 25}) {
      const ProtocolSpec s = ResolveSpec(Protocol::kGrr, eps, k);
      const int64_t t = 100000;
      const AuditOutcome o = Audit(Mechanism::Pure(s), Config(t, 3));
      EXPECT_LT(std::fabs(o.tp / double(t) - s.p), 4 * StdErr(s.p, t));
      EXPECT_LT(std::fabs(o.fp / double(t) - s.q), 4 * StdErr(s.q, t));
      EXPECT_EQ(o.eps_theoretical, eps);
      EXPECT_EQ(o.seed, 3u);
    }
  }
}

TEST(AuditTest, DeterministicAcrossWorkerCounts) {
  const Mechanism m = Mechanism::Pure(ResolveSpec(Protocol::kOlh, 1.0, 30));
  const AuditOutcome a = Audit(m, Config(30000, 4, 1));
  const AuditOutcome b = Audit(m, Config(30000, 4, 8));
  const AuditOutcome c = Audit(m, Config(30000, 4, 3));
  EXPECT_EQ(a.tp, b.tp);
  EXPECT_EQ(a.fp, b.fp);
  EXPECT_EQ(a.tp, c.tp);
  EXPECT_EQ(a.eps_emp, b.eps_emp);
  const AuditOutcome d = Audit(m, Config(30000, 5, 1));
  EXPECT_TRUE(a.tp != d.tp || a.fp != d.fp);
}

TEST(AuditTest, CorrectMechanismsStayBelowTheirBudget) {
  for (Protocol p : {Protocol::kGrr, Protocol::kSs, Protocol::kSue,
                     Protocol::kOue, Protocol::kBlh, Protocol::kOlh,
                     Protocol::kShe, Protocol::kThe}) {
    for (double eps : {0.5, 2.0}) {
      const Mechanism m = Mechanism::Pure(ResolveSpec(p, eps, 10));
      const AuditOutcome o = Audit(m, Config(20000, 6));
      EXPECT_LT(o.eps_emp, eps) << m.name() << " eps=" << eps;
      EXPECT_LE(o.eps_emp, o.eps_opt);
    }
  }
  for (ApproxProtocol p :
       {ApproxProtocol::kAgrr, ApproxProtocol::kAsue, ApproxProtocol::kAblh,
        ApproxProtocol::kAolh, ApproxProtocol::kGm, ApproxProtocol::kAgm}) {
    const Mechanism m = Mechanism::Approximate(ResolveApproxSpec(p, 1.0, 1e-5, 10));
    const AuditOutcome o = Audit(m, Config(20000, 7));
    EXPECT_LT(o.eps_emp, 1.0) << m.name();
    EXPECT_EQ(o.delta, 1e-5);
  }
}

TEST(AuditTest, RejectsBadConfigs) {
  const Mechanism m = Mechanism::Pure(ResolveSpec(Protocol::kGrr, 1.0, 4));
  AuditConfig c = Config(100, 1);
  c.v2 = c.v1;
  EXPECT_THROW(Audit(m, c), DomainError);
  c = Config(0, 1);
  EXPECT_THROW(Audit(m, c), DomainError);
  c = Config(100, 1);
  c.alpha = 1.0;
  EXPECT_THROW(Audit(m, c), DomainError);
  c = Config(100, 1);
  c.v2 = 4;
  EXPECT_THROW(Audit(m, c), DomainError);
  EXPECT_THROW(AuditLongitudinal(m, 0, Config(100, 1)), DomainError);
}

TEST(AuditLongitudinalTest, SingleRoundAgreesWithAudit) {
  const Mechanism m = Mechanism::Pure(ResolveSpec(Protocol::kSue, 1.0, 5));
  const AuditOutcome a = Audit(m, Config(50000, 8));
  const AuditOutcome b = AuditLongitudinal(m, 1, Config(50000, 9));
  EXPECT_EQ(b.eps_theoretical, 1.0);
  // Combined slack from both confidence intervals.
  const double slack = std::log(ClopperPearsonUpper(a.tp, a.trials, 0.0025) /
                                ClopperPearsonLower(a.tp, a.trials, 0.0025)) +
                       std::log(ClopperPearsonUpper(a.fp, a.trials, 0.0025) /
                                ClopperPearsonLower(a.fp, a.trials, 0.0025));
  EXPECT_LT(std::fabs(a.eps_emp - b.eps_emp), slack);
}

TEST(AuditLongitudinalTest, TheoreticalBudgetComposes) {
  const Mechanism m = Mechanism::Pure(ResolveSpec(Protocol::kGrr, 0.25, 2));
  const AuditOutcome o = AuditLongitudinal(m, 20, Config(2000, 10));
  EXPECT_DOUBLE_EQ(o.eps_theoretical, 5.0);
  const Mechanism g = Mechanism::Approximate(
      ResolveApproxSpec(ApproxProtocol::kAgm, 0.5, 1e-5, 4));
  const AuditOutcome og = AuditLongitudinal(g, 10, Config(2000, 11));
  EXPECT_DOUBLE_EQ(og.eps_theoretical, 5.0);
  EXPECT_EQ(og.delta, 1e-5);
}

TEST(AuditRsfdTest, OmitsDeltaAndNeedsTwoAttributes) {
  const RsfdSpec s = ResolveRsfdSpec(RsfdVariant::kGrr, 1.0, {4, 4});
  const AuditOutcome o = AuditRsfd(s, Config(20000, 12));
  EXPECT_EQ(o.delta, 0.0);
  EXPECT_EQ(o.eps_theoretical, 1.0);
  EXPECT_LT(o.eps_emp, 1.0);
  EXPECT_THROW(AuditRsfd(ResolveRsfdSpec(RsfdVariant::kGrr, 1.0, {4}),
                         Config(100, 1)),
               DomainError);
}

TEST(AuditLhoTest, UnboundedTheoreticalBudget) {
  const AuditOutcome o = AuditLho(2, 100, Config(20000, 13));
  EXPECT_TRUE(std::isinf(o.eps_theoretical));
  EXPECT_LT(o.eps_emp, 1.0);
  EXPECT_THROW(AuditLho(1, 100, Config(100, 1)), DomainError);
  EXPECT_THROW(AuditLho(2, 1, Config(100, 1)), DomainError);
}

TEST(BuggyUeTest, TrueBitRateIncludesUncorrectedFlip) {
  const ProtocolSpec s = ResolveSpec(Protocol::kSue, 0.25, 10);
  Rng rng(14);
  const int n = 100000;
  int on_true = 0;
  int on_other = 0;
  for (int i = 0; i < n; ++i) {
    const BitVector y = BuggyUePerturb(s, 3, rng);
    on_true += y.bits[3];
    on_other += y.bits[4];
  }
  EXPECT_NEAR(on_true / double(n), s.p + s.q - s.p * s.q, 0.01);
  EXPECT_NEAR(on_other / double(n), s.q, 0.01);
  EXPECT_THROW(BuggyUePerturb(ResolveSpec(Protocol::kGrr, 1, 4), 0, rng),
               DomainError);
  EXPECT_THROW(BuggyUePerturb(s, 10, rng), DomainError);
}

TEST(MechanismTest, Accessors) {
  const Mechanism the = Mechanism::Pure(ResolveSpec(Protocol::kThe, 2.0, 6));
  EXPECT_EQ(the.family(), AttackFamily::kThe);
  EXPECT_EQ(the.theta(), kDefaultTheThreshold);
  EXPECT_DOUBLE_EQ(the.noise_scale(), 1.0);
  EXPECT_EQ(the.name(), "the");
  const Mechanism lho = Mechanism::LocalHashingOnly(50, 4);
  EXPECT_EQ(lho.hash_range(), 4);
  EXPECT_EQ(lho.k(), 50);
  EXPECT_EQ(lho.name(), "lho");
  const Mechanism bug =
      Mechanism::BuggyUnaryEncoding(ResolveSpec(Protocol::kOue, 1.0, 6));
  EXPECT_EQ(bug.name(), "oue-buggy");
  EXPECT_EQ(bug.family(), AttackFamily::kUe);
  EXPECT_EQ(Mechanism::Approximate(ResolveApproxSpec(ApproxProtocol::kGm, 1.0,
                                                     1e-5, 3))
                .delta(),
            1e-5);
}

TEST(MechanismTest, LhoReportsUnperturbedHash) {
  const Mechanism m = Mechanism::LocalHashingOnly(30, 5);
  Rng rng(15);
  for (int i = 0; i < 1000; ++i) {
    const Hashed y = std::get<Hashed>(m.Perturb(i % 30, rng));
    ASSERT_EQ(HashFunction::FromSeed(y.hash_seed, 5)(i % 30), y.value);
  }
}

}  // namespace
}  // namespace ldp_audit
