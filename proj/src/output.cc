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

#include "ldp_audit/output.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "ldp_audit/experiment.h"
#include "ldp_audit/run_spec.h"

namespace ldp_audit {
namespace {

// A cell is either empty (not applicable) or a formatted value.
using Cell = std::optional<std::string>;
using Row = std::vector<std::pair<std::string, Cell>>;

Cell Num(double x) { return FormatDouble(x); }
Cell Int(long long x) { return std::to_string(x); }
Cell Flag(bool b) { return std::string(b ? "1" : "0"); }

template <typename T>
Cell Opt(const std::optional<T>& x) {
  if (!x) return std::nullopt;
  if constexpr (std::is_floating_point_v<T>) {
    return FormatDouble(*x);
  } else {
    return std::to_string(*x);
  }
}

Row PointCells(const RunSpec& spec, const GridPoint& p) {
  return {
      {"protocol", p.protocol},
      {"epsilon", Opt(p.epsilon)},
      {"delta", Num(p.delta)},
      {"k", Opt(p.k)},
      {"d", Opt(p.d)},
      {"tau", Opt(p.tau)},
      {"g", Opt(p.g)},
      {"T", Int(spec.trials)},
      {"alpha", Num(spec.alpha)},
  };
}

std::vector<Row> BuildRows(const RunSpec& spec, const ExperimentResult& result) {
  std::vector<Row> rows;
  for (const auto& pr : result.points) {
    double wall = 0;
    bool any_undefined = false;
    for (size_t r = 0; r < pr.runs.size(); ++r) {
      const AuditOutcome& o = pr.runs[r];
      wall += o.wall_time_s;
      any_undefined = any_undefined || o.undefined;
      Row row = PointCells(spec, pr.point);
      row.insert(row.end(),
                 {
                     {"run", Int(static_cast<long long>(r))},
                     {"seed", std::to_string(o.seed)},
                     {"tp", Int(o.tp)},
                     {"fp", Int(o.fp)},
                     {"p0_hat", Num(o.p0_hat)},
                     {"p1_hat", Num(o.p1_hat)},
                     {"eps_emp", Num(o.eps_emp)},
                     {"eps_theoretical", Num(o.eps_theoretical)},
                     {"eps_opt", Num(o.eps_opt)},
                     {"undefined_flag", Flag(o.undefined)},
                     {"negative_flag", Flag(o.negative)},
                     {"wall_time_s",
                      spec.timing ? Num(o.wall_time_s) : std::nullopt},
                     {"eps_emp_std", std::nullopt},
                 });
      rows.push_back(std::move(row));
    }
    const AuditOutcome& first = pr.runs.front();
    Row summary = PointCells(spec, pr.point);
    summary.insert(summary.end(),
                   {
                       {"run", std::string("summary")},
                       {"seed", std::nullopt},
                       {"tp", std::nullopt},
                       {"fp", std::nullopt},
                       {"p0_hat", std::nullopt},
                       {"p1_hat", std::nullopt},
                       {"eps_emp", Num(pr.eps_emp_mean)},
                       {"eps_theoretical", Num(first.eps_theoretical)},
                       {"eps_opt", Num(first.eps_opt)},
                       {"undefined_flag", Flag(any_undefined)},
                       {"negative_flag", Flag(pr.eps_emp_mean < 0.0)},
                       {"wall_time_s", spec.timing ? Num(wall) : std::nullopt},
                       {"eps_emp_std", Num(pr.eps_emp_std)},
                   });
    rows.push_back(std::move(summary));
  }
  return rows;
}

}  // namespace

std::string FormatDouble(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

const std::vector<std::string>& CsvColumns() {
  static const std::vector<std::string> columns = {
      "protocol",     "epsilon",        "delta",         "k",
      "d",            "tau",            "g",             "T",
      "alpha",        "run",            "seed",          "tp",
      "fp",           "p0_hat",         "p1_hat",        "eps_emp",
      "eps_theoretical", "eps_opt",     "undefined_flag", "negative_flag",
      "wall_time_s",  "eps_emp_std",
  };
  return columns;
}

void WriteCsv(const RunSpec& spec, const ExperimentResult& result,
              std::ostream& out) {
  for (const auto& [key, value] : EffectiveConfig(spec)) {
    out << "# " << key << '=' << value << '\n';
  }
  const auto& columns = CsvColumns();
  for (size_t i = 0; i < columns.size(); ++i) {
    out << (i > 0 ? "," : "") << columns[i];
  }
  out << '\n';
  for (const Row& row : BuildRows(spec, result)) {
    for (size_t i = 0; i < row.size(); ++i) {
      out << (i > 0 ? "," : "") << row[i].second.value_or("");
    }
    out << '\n';
  }
}

void WriteJson(const RunSpec& spec, const ExperimentResult& result,
               std::ostream& out) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto& [key, value] : EffectiveConfig(spec)) config[key] = value;
  doc["config"] = config;
  doc["columns"] = CsvColumns();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const Row& row : BuildRows(spec, result)) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [key, cell] : row) {
      if (!cell) {
        obj[key] = nullptr;
        continue;
      }
      const std::string& s = *cell;
      if (key == "protocol" || key == "run") {
        obj[key] = s;
      } else if (s == "nan" || s == "inf" || s == "-inf") {
        obj[key] = nullptr;
      } else if (key == "seed") {
        obj[key] = std::stoull(s);
      } else if (s.find_first_of(".en") == std::string::npos) {
        obj[key] = std::stoll(s);
      } else {
        obj[key] = std::stod(s);
      }
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void WriteResult(const RunSpec& spec, const ExperimentResult& result,
                 std::ostream& fallback) {
  std::ostringstream buffer;
  if (spec.format == OutputFormat::kJson) {
    WriteJson(spec, result, buffer);
  } else {
    WriteCsv(spec, result, buffer);
  }
  if (spec.out.empty()) {
    fallback << buffer.str();
    return;
  }
  std::ofstream file(spec.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + spec.out + "'");
  file << buffer.str();
  file.close();
  if (!file) throw IoError("failed writing output file '" + spec.out + "'");
}

}  // namespace ldp_audit
