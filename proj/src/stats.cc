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
#include <limits>
#include <string>

#include "ldp_audit/errors.h"

namespace ldp_audit {
namespace {

constexpr int kMaxContinuedFractionTerms = 1000000;
constexpr double kContinuedFractionEps = 1e-16;
constexpr double kTiny = 1e-300;

constexpr int kMaxQuantileIterations = 200;
constexpr double kQuantileAbsTolerance = 1e-12;
constexpr double kQuantileResidualTolerance = 1e-10;

double LogBeta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Continued fraction for I_x(a, b), evaluated with the modified Lentz
// method. Converges quickly for x < (a + 1) / (a + b + 2).
double BetaContinuedFraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxContinuedFractionTerms; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kContinuedFractionEps) return h;
  }
  throw ConvergenceError("incomplete beta continued fraction did not converge");
}

// x and y = 1 - x are both passed so that whichever is small keeps its full
// precision in the logarithms.
double IncompleteBetaUnchecked(double a, double b, double x, double y) {
  if (x <= 0.0) return 0.0;
  if (y <= 0.0) return 1.0;
  const double log_x = x < 0.5 ? std::log(x) : std::log1p(-y);
  const double log_y = y < 0.5 ? std::log(y) : std::log1p(-x);
  const double log_front = a * log_x + b * log_y - LogBeta(a, b);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_front) * BetaContinuedFraction(a, b, x) / a;
  }
  return 1.0 - std::exp(log_front) * BetaContinuedFraction(b, a, y) / b;
}

double BetaLogDensity(double a, double b, double x) {
  return (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - LogBeta(a, b);
}

void CheckShape(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("beta shape parameters must be positive and finite, got a=" +
                      std::to_string(a) + " b=" + std::to_string(b));
  }
}

void CheckCounts(int64_t successes, int64_t trials, double tail) {
  if (trials < 1) throw DomainError("trial count must be at least 1");
  if (successes < 0 || successes > trials) {
    throw DomainError("successes must lie in [0, trials], got " +
                      std::to_string(successes) + " of " +
                      std::to_string(trials));
  }
  if (!(tail > 0.0 && tail < 1.0)) {
    throw DomainError("tail probability must lie in (0, 1)");
  }
}

}  // namespace

double RegularizedIncompleteBeta(double a, double b, double x) {
  CheckShape(a, b);
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("incomplete beta argument must lie in [0, 1]");
  }
  return IncompleteBetaUnchecked(a, b, x, 1.0 - x);
}

// Bracketed bisection with Newton refinement. The bracket [lo, hi] always
// satisfies I(lo) <= p <= I(hi); Newton steps that leave it are replaced by
// bisection.
double BetaQuantile(double p, double a, double b) {
  CheckShape(a, b);
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("quantile probability must lie in (0, 1)");
  }
  double lo = 0.0;
  double hi = 1.0;
  double x = a / (a + b);
  double best_x = x;
  double best_residual = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < kMaxQuantileIterations; ++iter) {
    const double residual = RegularizedIncompleteBeta(a, b, x) - p;
    if (std::fabs(residual) < best_residual) {
      best_residual = std::fabs(residual);
      best_x = x;
    }
    if (residual == 0.0) return x;
    if (residual < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    // Adjacent doubles: no representable x does better.
    if (std::nextafter(lo, 1.0) >= hi) return best_x;
    if (hi - lo <= kQuantileAbsTolerance * std::min(1.0, x) &&
        best_residual < kQuantileResidualTolerance) {
      return best_x;
    }

    double next = x - residual / std::exp(BetaLogDensity(a, b, x));
    if (!(next > lo && next < hi) || !std::isfinite(next)) {
      next = 0.5 * (lo + hi);
    }
    if (std::fabs(next - x) <= std::numeric_limits<double>::epsilon() * x &&
        best_residual < kQuantileResidualTolerance) {
      return best_x;
    }
    x = next;
  }
  if (best_residual < kQuantileResidualTolerance) return best_x;
  throw ConvergenceError("beta quantile search did not converge for p=" +
                         std::to_string(p) + " a=" + std::to_string(a) +
                         " b=" + std::to_string(b));
}

double ClopperPearsonLower(int64_t successes, int64_t trials, double tail) {
  CheckCounts(successes, trials, tail);
  if (successes == 0) return 0.0;
  return BetaQuantile(tail, static_cast<double>(successes),
                      static_cast<double>(trials - successes + 1));
}

double ClopperPearsonUpper(int64_t successes, int64_t trials, double tail) {
  CheckCounts(successes, trials, tail);
  if (successes == trials) return 1.0;
  return BetaQuantile(1.0 - tail, static_cast<double>(successes + 1),
                      static_cast<double>(trials - successes));
}

ConfidenceBound MakeConfidenceBound(BoundSide side, int64_t successes,
                                    int64_t trials, double tail) {
  const double value = side == BoundSide::kLower
                           ? ClopperPearsonLower(successes, trials, tail)
                           : ClopperPearsonUpper(successes, trials, tail);
  return {value, side, successes, trials, tail};
}

}  // namespace ldp_audit
