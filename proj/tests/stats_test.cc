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

#include "ldp_audit/stats.h"

#include <cmath>
#include <tuple>

#include <gtest/gtest.h>
#include "ldp_audit/errors.h"
#include "oracles.h"

namespace ldp_audit {
namespace {

using testing::BetaCdfByQuadrature;
using testing::BinomialUpperTail;
using testing::BisectQuantile;
using testing::IntegerBetaCdf;

TEST(RegularizedIncompleteBetaTest, UniformCase) {
  EXPECT_NEAR(RegularizedIncompleteBeta(1, 1, 0.3), 0.3, 1e-15);
}

TEST(RegularizedIncompleteBetaTest, SymmetricMedian) {
  EXPECT_NEAR(RegularizedIncompleteBeta(2, 2, 0.5), 0.5, 1e-15);
}

TEST(RegularizedIncompleteBetaTest, MatchesQuadrature) {
  EXPECT_NEAR(RegularizedIncompleteBeta(3, 5, 0.4),
              BetaCdfByQuadrature(3, 5, 0.4), 1e-9);
}

TEST(RegularizedIncompleteBetaTest, Endpoints) {
  EXPECT_EQ(RegularizedIncompleteBeta(2.5, 7, 0.0), 0.0);
  EXPECT_EQ(RegularizedIncompleteBeta(2.5, 7, 1.0), 1.0);
}

TEST(RegularizedIncompleteBetaTest, MatchesBinomialIdentityOnIntegerGrid) {
  for (int a : {1, 2, 5, 17, 60}) {
    for (int b : {1, 3, 9, 84, 300}) {
      for (double x : {1e-4, 0.01, 0.1, 0.35, 0.5, 0.8, 0.99, 0.9999}) {
        EXPECT_NEAR(RegularizedIncompleteBeta(a, b, x), IntegerBetaCdf(a, b, x),
                    1e-10)
            << "a=" << a << " b=" << b << " x=" << x;
      }
    }
  }
}

TEST(RegularizedIncompleteBetaTest, MatchesQuadratureOnNonIntegerGrid) {
  for (double a : {1.5, 2.25, 7.5}) {
    for (double b : {1.0, 3.5, 12.0}) {
      for (double x : {0.05, 0.3, 0.6, 0.95}) {
        EXPECT_NEAR(RegularizedIncompleteBeta(a, b, x),
                    BetaCdfByQuadrature(a, b, x), 1e-9)
            << "a=" << a << " b=" << b << " x=" << x;
      }
    }
  }
}

TEST(RegularizedIncompleteBetaTest, MonotoneInX) {
  double prev = 0;
  for (int i = 0; i <= 1000; ++i) {
    const double v = RegularizedIncompleteBeta(4.5, 9, i / 1000.0);
    ASSERT_GE(v, prev);
    prev = v;
  }
}

TEST(RegularizedIncompleteBetaTest, RejectsBadArguments) {
  EXPECT_THROW(RegularizedIncompleteBeta(0, 1, 0.5), DomainError);
  EXPECT_THROW(RegularizedIncompleteBeta(1, -2, 0.5), DomainError);
  EXPECT_THROW(RegularizedIncompleteBeta(1, 1, -0.1), DomainError);
  EXPECT_THROW(RegularizedIncompleteBeta(1, 1, 1.1), DomainError);
}

TEST(BetaQuantileTest, UniformAndSymmetricCases) {
  EXPECT_NEAR(BetaQuantile(0.25, 1, 1), 0.25, 1e-12);
  EXPECT_NEAR(BetaQuantile(0.5, 4, 4), 0.5, 1e-12);
}

TEST(BetaQuantileTest, MatchesBisectionOnOracle) {
  const double q = BetaQuantile(0.005, 17, 84);
  const double oracle = BisectQuantile(
      [](double x) { return IntegerBetaCdf(17, 84, x); }, 0.005);
  EXPECT_NEAR(q, oracle, 1e-9);
  EXPECT_NEAR(IntegerBetaCdf(17, 84, q), 0.005, 1e-10);
}

TEST(BetaQuantileTest, InvertsIncompleteBetaOnGrid) {
  for (double p : {1e-6, 0.0025, 0.1, 0.5, 0.9, 0.9975, 1 - 1e-6}) {
    for (double a : {0.5, 1.0, 3.0, 50.0, 1e4}) {
      for (double b : {0.5, 2.0, 40.0, 1e5}) {
        const double q = BetaQuantile(p, a, b);
        const double f = RegularizedIncompleteBeta(a, b, q);
        // Near 1 a single ulp of q can move the CDF by more than 1e-9; then
        // q must be a neighbour of the exact quantile.
        const double below = RegularizedIncompleteBeta(a, b, std::nextafter(q, 0.0));
        const double above = RegularizedIncompleteBeta(a, b, std::nextafter(q, 1.0));
        const bool best_double = below <= p && p <= above;
        EXPECT_TRUE(std::fabs(f - p) <= 1e-9 || best_double)
            << "p=" << p << " a=" << a << " b=" << b << " F(q)=" << f;
      }
    }
  }
}

TEST(BetaQuantileTest, RejectsBadArguments) {
  EXPECT_THROW(BetaQuantile(0.0, 1, 1), DomainError);
  EXPECT_THROW(BetaQuantile(1.0, 1, 1), DomainError);
  EXPECT_THROW(BetaQuantile(0.5, 0, 1), DomainError);
}

TEST(ClopperPearsonTest, ZeroSuccessLowerIsZero) {
  EXPECT_EQ(ClopperPearsonLower(0, 1000, 0.005), 0.0);
}

TEST(ClopperPearsonTest, AllSuccessUpperIsOne) {
  EXPECT_EQ(ClopperPearsonUpper(1000, 1000, 0.005), 1.0);
}

TEST(ClopperPearsonTest, ExtremeCountsAtTenThousandTrials) {
  EXPECT_NEAR(ClopperPearsonLower(10000, 10000, 0.005), 0.9994, 1e-4);
  EXPECT_NEAR(ClopperPearsonUpper(0, 10000, 0.005), 0.0006, 1e-4);
}

TEST(ClopperPearsonTest, ClosedFormForExtremeCounts) {
  // I_q(T, 1) = q^T and 1 - I_q(1, T) = (1 - q)^T.
  for (int64_t t : {1, 10, 1000, 1000000}) {
    EXPECT_NEAR(ClopperPearsonLower(t, t, 0.0025), std::pow(0.0025, 1.0 / t),
                1e-12);
    EXPECT_NEAR(ClopperPearsonUpper(0, t, 0.0025),
                1.0 - std::pow(0.0025, 1.0 / t), 1e-12);
  }
}

TEST(ClopperPearsonTest, BracketsTheProportion) {
  for (int64_t t : {1, 7, 50, 1000}) {
    for (int64_t x = 0; x <= t; x += std::max<int64_t>(1, t / 13)) {
      const double p = static_cast<double>(x) / t;
      EXPECT_LE(ClopperPearsonLower(x, t, 0.005), p);
      EXPECT_GE(ClopperPearsonUpper(x, t, 0.005), p);
    }
  }
}

TEST(ClopperPearsonTest, LowerBoundSatisfiesBinomialTailIdentity) {
  for (int64_t t : {5, 20, 50}) {
    for (int64_t x = 1; x <= t; ++x) {
      const double lower = ClopperPearsonLower(x, t, 0.005);
      EXPECT_NEAR(BinomialUpperTail(t, lower, x), 0.005, 1e-6)
          << "x=" << x << " T=" << t;
    }
  }
}

TEST(ClopperPearsonTest, UpperBoundSatisfiesBinomialTailIdentity) {
  for (int64_t t : {5, 20, 50}) {
    for (int64_t x = 0; x < t; ++x) {
      const double upper = ClopperPearsonUpper(x, t, 0.005);
      EXPECT_NEAR(1.0 - BinomialUpperTail(t, upper, x + 1), 0.005, 1e-6)
          << "x=" << x << " T=" << t;
    }
  }
}

TEST(ClopperPearsonTest, MonotoneInSuccesses) {
  for (int64_t t : {10, 300}) {
    double prev_lo = -1;
    double prev_hi = -1;
    for (int64_t x = 0; x <= t; ++x) {
      const double lo = ClopperPearsonLower(x, t, 0.0025);
      const double hi = ClopperPearsonUpper(x, t, 0.0025);
      ASSERT_GE(lo, prev_lo);
      ASSERT_GE(hi, prev_hi);
      prev_lo = lo;
      prev_hi = hi;
    }
  }
}

TEST(ClopperPearsonTest, RejectsBadArguments) {
  EXPECT_THROW(ClopperPearsonLower(11, 10, 0.005), DomainError);
  EXPECT_THROW(ClopperPearsonUpper(0, 0, 0.005), DomainError);
  EXPECT_THROW(ClopperPearsonLower(-1, 10, 0.005), DomainError);
  EXPECT_THROW(ClopperPearsonLower(1, 10, 0.0), DomainError);
  EXPECT_THROW(ClopperPearsonUpper(1, 10, 1.0), DomainError);
}

TEST(ConfidenceBoundTest, RecordsInputs) {
  const ConfidenceBound b = MakeConfidenceBound(BoundSide::kLower, 3, 10, 0.01);
  EXPECT_EQ(b.side, BoundSide::kLower);
  EXPECT_EQ(b.successes, 3);
  EXPECT_EQ(b.trials, 10);
  EXPECT_EQ(b.tail, 0.01);
  EXPECT_EQ(b.value, ClopperPearsonLower(3, 10, 0.01));
}

}  // namespace
}  // namespace ldp_audit
