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

#include "ldp_audit/rng.h"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>
#include "oracles.h"

namespace ldp_audit {
namespace {

using testing::ChiSquareCritical;
using testing::ChiSquareStatistic;
using testing::KsCritical001;
using testing::KsStatistic;
using testing::StandardNormalCdf;

TEST(RngTest, EqualSeedsGiveEqualStreams) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.NextU64(), b.NextU64());
}

TEST(RngTest, DerivedStreamsDiffer) {
  Rng a = Rng::ForStream(7, 0);
  Rng b = Rng::ForStream(7, 1);
  Rng c = Rng::ForStream(8, 0);
  const uint64_t x = a.NextU64();
  EXPECT_NE(x, b.NextU64());
  EXPECT_NE(x, c.NextU64());
  EXPECT_NE(DeriveSeed(1, 2, 3), DeriveSeed(1, 3, 2));
}

TEST(RngTest, UniformOpenNeverHitsEndpoints) {
  Rng rng(1);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.UniformOpen01();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RngTest, UniformIntIsUniform) {
  Rng rng(3);
  const int n = 7;
  std::vector<int64_t> counts(n, 0);
  for (int i = 0; i < 70000; ++i) {
    const uint64_t x = rng.UniformInt(n);
    ASSERT_LT(x, static_cast<uint64_t>(n));
    ++counts[x];
  }
  EXPECT_LT(ChiSquareStatistic(counts, std::vector<double>(n, 1.0 / n)),
            ChiSquareCritical(n - 1, 0.001));
}

TEST(RngTest, LaplaceHasZeroMeanAndVarianceTwoBSquared) {
  Rng rng(5);
  const double b = 1.5;
  const int n = 200000;
  double sum = 0;
  double sum_sq = 0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.Laplace(b);
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 0.0, 0.03);
  EXPECT_NEAR((sum_sq / n - mean * mean) / (2 * b * b), 1.0, 0.05);
}

TEST(RngTest, StandardNormalPassesKolmogorovSmirnov) {
  Rng rng(11);
  std::vector<double> xs(100000);
  for (double& x : xs) x = rng.StandardNormal();
  EXPECT_LT(KsStatistic(xs, StandardNormalCdf), KsCritical001(xs.size()));
}

}  // namespace
}  // namespace ldp_audit
