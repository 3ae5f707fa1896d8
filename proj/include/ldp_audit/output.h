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

#ifndef LDP_AUDIT_OUTPUT_H_
#define LDP_AUDIT_OUTPUT_H_

#include <ostream>
#include <string>
#include <vector>

namespace ldp_audit {

struct RunSpec;
struct ExperimentResult;

// 17 significant digits; "nan", "inf" and "-inf" for non-finite values.
std::string FormatDouble(double x);

const std::vector<std::string>& CsvColumns();

// Effective config as '#' lines, a header row, one row per (point, run)
// and a summary row per point.
void WriteCsv(const RunSpec& spec, const ExperimentResult& result,
              std::ostream& out);

// Same rows as the CSV under "rows"; non-finite and missing values are null.
void WriteJson(const RunSpec& spec, const ExperimentResult& result,
               std::ostream& out);

// Writes in spec.format to spec.out, or to `fallback` when spec.out is
// empty. Throws IoError when the file cannot be written.
void WriteResult(const RunSpec& spec, const ExperimentResult& result,
                 std::ostream& fallback);

}  // namespace ldp_audit

#endif  // LDP_AUDIT_OUTPUT_H_
