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

#ifndef LDP_AUDIT_REPORT_H_
#define LDP_AUDIT_REPORT_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ldp_audit {

// A single value in [0, range).
struct Categorical {
  int value;
  int range;
  friend bool operator==(const Categorical&, const Categorical&) = default;
};

// A nonempty subset of [0, k), in sampling order.
struct Subset {
  std::vector<int> members;
  int k;
  friend bool operator==(const Subset&, const Subset&) = default;
};

struct BitVector {
  std::vector<uint8_t> bits;
  friend bool operator==(const BitVector&, const BitVector&) = default;
};

struct RealVector {
  std::vector<double> values;
  friend bool operator==(const RealVector&, const RealVector&) = default;
};

// <H, y>: the hash function travels as its seed.
struct Hashed {
  uint64_t hash_seed;
  int g;
  int value;
  friend bool operator==(const Hashed&, const Hashed&) = default;
};

using Report = std::variant<Categorical, Subset, BitVector, RealVector, Hashed>;

// Human-readable variant name, for error messages.
std::string ReportKindName(const Report& report);

// Checks the structural invariants of a report against domain size k
// (range for Categorical/Hashed is taken from the report itself). Throws
// DomainError on violation.
void ValidateReport(const Report& report, int k);

}  // namespace ldp_audit

#endif  // LDP_AUDIT_REPORT_H_
