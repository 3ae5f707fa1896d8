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

#include "ldp_audit/experiment.h"

#include <cmath>
#include <iostream>
#include <limits>
#include <memory>

#include "ldp_audit/approx_protocols.h"
#include "ldp_audit/errors.h"
#include "ldp_audit/mechanism.h"
#include "ldp_audit/output.h"
#include "ldp_audit/protocols.h"
#include "ldp_audit/rng.h"
#include "ldp_audit/rsfd.h"

namespace ldp_audit {
namespace {

template <typename T>
const std::vector<T>& Require(const std::vector<T>& values, const char* key) {
  if (values.empty()) {
    throw ConfigError(std::string("missing required key '") + key + "'");
  }
  return values;
}

std::string Describe(const GridPoint& p) {
  std::string out = "protocol=" + p.protocol;
  if (p.epsilon) out += " eps=" + FormatDouble(*p.epsilon);
  if (p.delta != 0) out += " delta=" + FormatDouble(p.delta);
  if (p.k) out += " k=" + std::to_string(*p.k);
  if (p.d) out += " d=" + std::to_string(*p.d);
  if (p.tau) out += " tau=" + std::to_string(*p.tau);
  if (p.g) out += " g=" + std::to_string(*p.g);
  return out;
}

// Builds the mechanism for an audit/sweep/longitudinal point.
Mechanism MakeMechanism(const RunSpec& spec, GridPoint& point) {
  if (const auto p = ParseProtocol(point.protocol)) {
    ProtocolSpec s;
    try {
      s = ResolveSpec(*p, *point.epsilon, *point.k,
                      *p == Protocol::kThe ? spec.theta : std::nullopt);
    } catch (const DomainError& e) {
      throw ConfigError(std::string(e.what()) + " at " + Describe(point));
    }
    if (s.g > 0) point.g = s.g;
    return Mechanism::Pure(s);
  }
  if (const auto p = ParseApproxProtocol(point.protocol)) {
    ApproxSpec s;
    try {
      s = ResolveApproxSpec(*p, *point.epsilon, point.delta, *point.k);
    } catch (const DomainError& e) {
      throw ConfigError(std::string(e.what()) + " at " + Describe(point) +
                        (point.delta == 0 ? " delta=0" : ""));
    }
    if (s.g > 0) point.g = s.g;
    if (s.g_clamped) {
      std::cerr << "note: AOLH hash range " << FormatDouble(s.g_closed_form)
                << " clamped to 2 at " << Describe(point) << '\n';
    }
    return Mechanism::Approximate(s);
  }
  throw ConfigError("unknown protocol '" + point.protocol + "'");
}

bool IsPure(const std::string& name) { return ParseProtocol(name).has_value(); }

void CheckSingle(size_t n, const char* key) {
  if (n > 1) {
    throw ConfigError(std::string("audit takes a single value for '") + key +
                      "'; use sweep for grids");
  }
}

void ExpandProtocolGrid(const RunSpec& spec, std::vector<PreparedPoint>& out) {
  const bool longitudinal = spec.subcommand == Subcommand::kLongitudinal;
  const std::vector<double> deltas =
      spec.delta.empty() ? std::vector<double>{0.0} : spec.delta;
  const std::vector<int> taus =
      longitudinal ? Require(spec.tau, "tau") : std::vector<int>{0};
  for (const auto& name : Require(spec.protocols, "protocol")) {
    if (!IsPure(name) && !ParseApproxProtocol(name)) {
      throw ConfigError("unknown protocol '" + name + "'");
    }
    // Pure protocols have no delta axis.
    const std::vector<double> point_deltas =
        IsPure(name) ? std::vector<double>{0.0} : deltas;
    for (double eps : Require(spec.eps, "eps")) {
      for (double delta : point_deltas) {
        for (int k : Require(spec.k, "k")) {
          for (int tau : taus) {
            GridPoint point;
            point.protocol = name;
            point.epsilon = eps;
            point.delta = delta;
            point.k = k;
            if (longitudinal) point.tau = tau;
            auto mech = std::make_shared<Mechanism>(MakeMechanism(spec, point));
            PreparedPoint prepared{point, nullptr};
            if (longitudinal) {
              if (tau < 1) throw DomainError("tau must be at least 1");
              prepared.run = [mech, tau](const AuditConfig& c) {
                return AuditLongitudinal(*mech, tau, c);
              };
            } else {
              prepared.run = [mech](const AuditConfig& c) {
                return Audit(*mech, c);
              };
            }
            out.push_back(std::move(prepared));
          }
        }
      }
    }
  }
}

void ExpandRsfdGrid(const RunSpec& spec, std::vector<PreparedPoint>& out) {
  const std::vector<std::string> variants =
      spec.protocols.empty() ? std::vector<std::string>{"grr"} : spec.protocols;
  const std::vector<int> ds = spec.d.empty() ? std::vector<int>{2} : spec.d;
  for (const auto& name : variants) {
    const auto variant = ParseRsfdVariant(name);
    if (!variant) throw ConfigError("unknown RS+FD variant '" + name + "'");
    for (double eps : Require(spec.eps, "eps")) {
      for (int k : Require(spec.k, "k")) {
        for (int d : ds) {
          GridPoint point;
          point.protocol = "rsfd-" + RsfdVariantName(*variant);
          point.epsilon = eps;
          point.k = k;
          point.d = d;
          if (d < 2) throw DomainError("RS+FD needs d >= 2 attributes");
          auto rs = std::make_shared<RsfdSpec>(
              ResolveRsfdSpec(*variant, eps, std::vector<int>(d, k)));
          out.push_back({point, [rs](const AuditConfig& c) {
                           return AuditRsfd(*rs, c);
                         }});
        }
      }
    }
  }
}

void ExpandLhoGrid(const RunSpec& spec, std::vector<PreparedPoint>& out) {
  for (int g : Require(spec.g, "g")) {
    for (int k : Require(spec.k, "k")) {
      GridPoint point;
      point.protocol = "lho";
      point.k = k;
      point.g = g;
      auto mech =
          std::make_shared<Mechanism>(Mechanism::LocalHashingOnly(k, g));
      out.push_back(
          {point, [mech](const AuditConfig& c) { return Audit(*mech, c); }});
    }
  }
}

void ExpandDebugUeGrid(const RunSpec& spec, std::vector<PreparedPoint>& out) {
  const std::vector<std::string> names =
      spec.protocols.empty() ? std::vector<std::string>{"sue"} : spec.protocols;
  for (const auto& name : names) {
    const auto p = ParseProtocol(name);
    if (!p || (*p != Protocol::kSue && *p != Protocol::kOue)) {
      throw ConfigError("debug-ue protocol must be sue or oue, got '" + name +
                        "'");
    }
    for (double eps : Require(spec.eps, "eps")) {
      for (int k : Require(spec.k, "k")) {
        const ProtocolSpec s = ResolveSpec(*p, eps, k);
        for (bool buggy : {true, false}) {
          GridPoint point;
          point.protocol = ProtocolName(*p) + (buggy ? "-buggy" : "");
          point.epsilon = eps;
          point.k = k;
          auto mech = std::make_shared<Mechanism>(
              buggy ? Mechanism::BuggyUnaryEncoding(s) : Mechanism::Pure(s));
          out.push_back(
              {point, [mech](const AuditConfig& c) { return Audit(*mech, c); }});
        }
      }
    }
  }
}

}  // namespace

std::vector<PreparedPoint> ExpandGrid(const RunSpec& spec) {
  std::vector<PreparedPoint> out;
  if (spec.subcommand == Subcommand::kAudit) {
    CheckSingle(spec.protocols.size(), "protocol");
    CheckSingle(spec.eps.size(), "eps");
    CheckSingle(spec.delta.size(), "delta");
    CheckSingle(spec.k.size(), "k");
  }
  try {
    switch (spec.subcommand) {
      case Subcommand::kAudit:
      case Subcommand::kSweep:
      case Subcommand::kLongitudinal:
        ExpandProtocolGrid(spec, out);
        break;
      case Subcommand::kRsfd:
        ExpandRsfdGrid(spec, out);
        break;
      case Subcommand::kLho:
        ExpandLhoGrid(spec, out);
        break;
      case Subcommand::kDebugUe:
        ExpandDebugUeGrid(spec, out);
        break;
      case Subcommand::kEpsOpt:
        throw ConfigError("eps-opt has no grid");
    }
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (out.empty()) throw ConfigError("grid is empty");
  return out;
}

uint64_t RunSeed(uint64_t master_seed, size_t point_index, int run) {
  return DeriveSeed(master_seed, point_index, static_cast<uint64_t>(run));
}

ExperimentResult RunExperiment(const RunSpec& spec) {
  const std::vector<PreparedPoint> grid = ExpandGrid(spec);
  ExperimentResult result;
  result.points.reserve(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    PointResult pr;
    pr.point = grid[i].point;
    double sum = 0;
    for (int r = 0; r < spec.runs; ++r) {
      AuditConfig config;
      config.trials = spec.trials;
      config.alpha = spec.alpha;
      config.master_seed = RunSeed(spec.seed, i, r);
      config.workers = spec.workers;
      AuditOutcome outcome;
      try {
        outcome = grid[i].run(config);
      } catch (const DomainError& e) {
        throw ConfigError(std::string(e.what()) + " at " + Describe(pr.point));
      }
      sum += outcome.eps_emp;
      pr.runs.push_back(outcome);
    }
    pr.eps_emp_mean = sum / spec.runs;
    if (spec.runs > 1) {
      double ss = 0;
      for (const auto& o : pr.runs) {
        ss += (o.eps_emp - pr.eps_emp_mean) * (o.eps_emp - pr.eps_emp_mean);
      }
      pr.eps_emp_std = std::sqrt(ss / (spec.runs - 1));
    } else {
      pr.eps_emp_std = std::numeric_limits<double>::quiet_NaN();
    }
    result.points.push_back(std::move(pr));
  }
  return result;
}

}  // namespace ldp_audit
