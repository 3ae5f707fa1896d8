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

// Command-line front end for the LDP auditor.
//
//   ldp-audit audit --protocol grr --eps 2 --k 100 --T 100000
//   ldp-audit sweep --protocols grr,sue --eps 0.5,1,2 --k 25,100
//   ldp-audit eps-opt --alpha 0.01 --T 10000
//
// Exit codes: 0 success, 1 invalid configuration, 2 I/O failure.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "ldp_audit/auditor.h"
#include "ldp_audit/errors.h"
#include "ldp_audit/experiment.h"
#include "ldp_audit/output.h"
#include "ldp_audit/run_spec.h"

namespace {

struct SubcommandInfo {
  ldp_audit::Subcommand subcommand;
  const char* description;
};

constexpr SubcommandInfo kSubcommands[] = {
    {ldp_audit::Subcommand::kAudit, "Audit a single protocol configuration"},
    {ldp_audit::Subcommand::kSweep, "Audit every point of a parameter grid"},
    {ldp_audit::Subcommand::kLongitudinal,
     "Audit with the longitudinal attack over tau reports"},
    {ldp_audit::Subcommand::kRsfd, "Audit RS+FD multidimensional protocols"},
    {ldp_audit::Subcommand::kLho, "Audit local hashing without perturbation"},
    {ldp_audit::Subcommand::kDebugUe,
     "Audit unary encoding with and without the correction step"},
    {ldp_audit::Subcommand::kEpsOpt,
     "Print the largest estimate T trials can certify"},
};

const std::map<std::string, std::string>& FlagHelp() {
  static const std::map<std::string, std::string> help = {
      {"protocol", "Protocol name(s), comma separated"},
      {"protocols", "Same as --protocol"},
      {"eps", "Epsilon grid"},
      {"delta", "Delta grid (approximate protocols)"},
      {"k", "Domain size grid"},
      {"tau", "Number of collections (longitudinal)"},
      {"d", "Number of attributes (rsfd, default 2)"},
      {"g", "Hash range grid (lho)"},
      {"T", "Trials per input"},
      {"alpha", "Confidence level parameter"},
      {"runs", "Repetitions per grid point"},
      {"seed", "Master seed"},
      {"workers", "Worker threads (default from LDP_AUDIT_WORKERS)"},
      {"theta", "THE threshold override"},
      {"out", "Output file (default stdout)"},
      {"format", "csv or json"},
      {"timing", "on: record wall time (output no longer reproducible)"},
  };
  return help;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Empirical privacy auditing for local differential privacy"};
  app.require_subcommand(1);

  std::map<std::string, std::string> values;
  std::string config_path;
  std::map<std::string, CLI::Option*> options;
  std::map<CLI::App*, ldp_audit::Subcommand> commands;
  for (const auto& info : kSubcommands) {
    CLI::App* sub = app.add_subcommand(
        ldp_audit::SubcommandName(info.subcommand), info.description);
    commands[sub] = info.subcommand;
    sub->add_option("--config", config_path, "Flat key=value config file");
    for (const auto& key : ldp_audit::ConfigKeys()) {
      CLI::Option* opt =
          sub->add_option("--" + key, values[key], FlagHelp().at(key));
      options[SubcommandName(info.subcommand) + "/" + key] = opt;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  const ldp_audit::Subcommand subcommand = commands.at(sub);
  try {
    ldp_audit::KeyValues flags;
    for (const auto& key : ldp_audit::ConfigKeys()) {
      if (options.at(sub->get_name() + "/" + key)->count() > 0) {
        flags[key] = values[key];
      }
    }
    const ldp_audit::KeyValues file = config_path.empty()
                                          ? ldp_audit::KeyValues{}
                                          : ldp_audit::LoadConfigFile(config_path);
    const char* env = std::getenv(ldp_audit::kWorkersEnv);
    const ldp_audit::RunSpec spec = ldp_audit::ResolveRunSpec(
        subcommand, file, flags,
        env ? std::optional<std::string>(env) : std::nullopt);

    if (subcommand == ldp_audit::Subcommand::kEpsOpt) {
      std::printf("%.3f\n", ldp_audit::EpsOpt(spec.alpha, spec.trials));
      return 0;
    }
    const ldp_audit::ExperimentResult result = ldp_audit::RunExperiment(spec);
    ldp_audit::WriteResult(spec, result, std::cout);
    std::cout.flush();
    if (!std::cout) throw ldp_audit::IoError("failed writing to stdout");
  } catch (const ldp_audit::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ldp_audit::ConfigError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return 1;
  } catch (const ldp_audit::DomainError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
