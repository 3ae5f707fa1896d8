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

#ifndef LDP_AUDIT_EXPERIMENT_H_
#define LDP_AUDIT_EXPERIMENT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ldp_audit/auditor.h"
#include "ldp_audit/run_spec.h"

namespace ldp_audit {

// One point of the expanded grid. Axes that do not apply stay empty.
struct GridPoint {
  std::string protocol;
  std::optional<double> epsilon;
  double delta = 0;
  std::optional<int> k;
  std::optional<int> d;
  std::optional<int> tau;
  std::optional<int> g;
};

struct PreparedPoint {
  GridPoint point;
  std::function<AuditOutcome(const AuditConfig&)> run;
};

// Expands and validates the whole grid before anything runs. Throws
// ConfigError naming the violated constraint and the offending point.
std::vector<PreparedPoint> ExpandGrid(const RunSpec& spec);

struct PointResult {
  GridPoint point;
  std::vector<AuditOutcome> runs;
  double eps_emp_mean = 0;
  // Sample standard deviation; NaN for a single run.
  double eps_emp_std = 0;
};

struct ExperimentResult {
  std::vector<PointResult> points;
};

// Seed for run `run` of grid point `point_index`.
uint64_t RunSeed(uint64_t master_seed, size_t point_index, int run);

// Runs every (grid point, run) in grid order.
ExperimentResult RunExperiment(const RunSpec& spec);

}  // namespace ldp_audit

#endif  // LDP_AUDIT_EXPERIMENT_H_
