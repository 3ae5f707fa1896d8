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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "ldp_audit/errors.h"
#include "ldp_audit/stats.h"

namespace ldp_audit {
namespace {

void CheckConfig(const AuditConfig& config, int k) {
  if (config.trials < 1) throw DomainError("trial count T must be at least 1");
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw DomainError("alpha must lie in (0, 1)");
  }
  if (config.v1 == config.v2) throw DomainError("v1 and v2 must differ");
  if (config.v1 < 0 || config.v1 >= k || config.v2 < 0 || config.v2 >= k) {
    throw DomainError("v1 and v2 must lie in [0, k)");
  }
  if (config.workers < 1) throw DomainError("workers must be at least 1");
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

double BoundTail(double alpha) { return alpha / 4.0; }

double EpsOpt(double alpha, int64_t trials) {
  if (trials < 1) throw DomainError("trial count T must be at least 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  const double tail = BoundTail(alpha);
  return std::log(ClopperPearsonLower(trials, trials, tail) /
                  ClopperPearsonUpper(0, trials, tail));
}

AuditOutcome Summarize(int64_t tp, int64_t fp, int64_t trials, double alpha,
                       double delta, double eps_theoretical) {
  if (!(delta >= 0.0 && delta < 1.0)) throw DomainError("delta must lie in [0, 1)");
  const double tail = BoundTail(alpha);
  AuditOutcome out;
  out.tp = tp;
  out.fp = fp;
  out.trials = trials;
  out.alpha = alpha;
  out.delta = delta;
  out.p0_hat = ClopperPearsonLower(tp, trials, tail);
  out.p1_hat = ClopperPearsonUpper(fp, trials, tail);
  out.eps_theoretical = eps_theoretical;
  out.eps_opt = EpsOpt(alpha, trials);
  if (out.p0_hat <= delta) {
    out.undefined = true;
    out.eps_emp = std::numeric_limits<double>::quiet_NaN();
  } else {
    out.eps_emp = std::log((out.p0_hat - delta) / out.p1_hat);
    out.negative = out.eps_emp < 0.0;
  }
  return out;
}

TrialCounts RunTrials(const TrialFn& trial, const AuditConfig& config) {
  const int64_t blocks = (config.trials + kTrialBlockSize - 1) / kTrialBlockSize;
  std::vector<TrialCounts> per_block(blocks);
  std::atomic<int64_t> next{0};
  auto work = [&] {
    for (int64_t b = next++; b < blocks; b = next++) {
      Rng rng = Rng::ForStream(config.master_seed, static_cast<uint64_t>(b));
      const int64_t n =
          std::min(kTrialBlockSize, config.trials - b * kTrialBlockSize);
      TrialCounts c;
      for (int64_t i = 0; i < n; ++i) {
        if (trial(config.v1, rng) == config.v1) ++c.tp;
        if (trial(config.v2, rng) == config.v1) ++c.fp;
      }
      per_block[b] = c;
    }
  };
  const int threads =
      static_cast<int>(std::min<int64_t>(config.workers, blocks));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  TrialCounts total;
  for (const auto& c : per_block) {
    total.tp += c.tp;
    total.fp += c.fp;
  }
  return total;
}

AuditOutcome AuditTrials(const TrialFn& trial, double eps_theoretical,
                         double delta, const AuditConfig& config) {
  if (config.trials < 1) throw DomainError("trial count T must be at least 1");
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw DomainError("alpha must lie in (0, 1)");
  }
  if (config.v1 == config.v2) throw DomainError("v1 and v2 must differ");
  const auto start = std::chrono::steady_clock::now();
  const TrialCounts c = RunTrials(trial, config);
  AuditOutcome out = Summarize(c.tp, c.fp, config.trials, config.alpha, delta,
                               eps_theoretical);
  out.seed = config.master_seed;
  out.wall_time_s = Seconds(start);
  return out;
}

AuditOutcome Audit(const Mechanism& mechanism, const AuditConfig& config) {
  CheckConfig(config, mechanism.k());
  TrialFn trial = [&mechanism](int v, Rng& rng) {
    return mechanism.Attack(mechanism.Perturb(v, rng), rng).value;
  };
  return AuditTrials(trial, mechanism.epsilon(), mechanism.delta(), config);
}

AuditOutcome AuditLongitudinal(const Mechanism& mechanism, int tau,
                               const AuditConfig& config) {
  if (tau < 1) throw DomainError("tau must be at least 1");
  CheckConfig(config, mechanism.k());
  const PerturbFn perturb = [&mechanism](int v, Rng& rng) {
    return mechanism.Perturb(v, rng);
  };
  const AttackFamily family = mechanism.family();
  const int k = mechanism.k();
  const auto theta = mechanism.theta();
  TrialFn trial;
  if (HasSupportSet(family)) {
    trial = [&, family, k, theta, tau](int v, Rng& rng) {
      return LongitudinalAttack(perturb, family, v, tau, k, rng, theta).value;
    };
  } else {
    trial = [&, k, tau](int v, Rng& rng) {
      return LongitudinalAttackHe(perturb, v, tau, k, rng).value;
    };
  }
  return AuditTrials(trial, tau * mechanism.epsilon(), mechanism.delta(),
                     config);
}

AuditOutcome AuditRsfd(const RsfdSpec& spec, const AuditConfig& config) {
  if (spec.d < 2) throw DomainError("RS+FD needs d >= 2 attributes");
  const int k_min = *std::min_element(spec.k_vec.begin(), spec.k_vec.end());
  CheckConfig(config, k_min);
  TrialFn trial = [&spec](int v, Rng& rng) {
    const std::vector<int> values(spec.d, v);
    return RsfdAttack(spec, RsfdPerturb(spec, values, rng), rng)
        .prediction.value;
  };
  return AuditTrials(trial, spec.epsilon, 0.0, config);
}

AuditOutcome AuditLho(int g, int k, const AuditConfig& config) {
  return Audit(Mechanism::LocalHashingOnly(k, g), config);
}

}  // namespace ldp_audit
