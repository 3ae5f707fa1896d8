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

#include "ldp_audit/report.h"

#include <algorithm>
#include <cmath>

#include "ldp_audit/errors.h"

namespace ldp_audit {

std::string ReportKindName(const Report& report) {
  switch (report.index()) {
    case 0:
      return "categorical";
    case 1:
      return "subset";
    case 2:
      return "bit-vector";
    case 3:
      return "real-vector";
    default:
      return "hashed";
  }
}

void ValidateReport(const Report& report, int k) {
  struct Visitor {
    int k;
    void operator()(const Categorical& r) const {
      if (r.value < 0 || r.value >= r.range) {
        throw DomainError("categorical report outside its range");
      }
    }
    void operator()(const Subset& r) const {
      if (r.members.empty()) throw DomainError("subset report is empty");
      std::vector<int> sorted = r.members;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw DomainError("subset report has duplicate members");
      }
      if (sorted.front() < 0 || sorted.back() >= k) {
        throw DomainError("subset report member outside [0, k)");
      }
    }
    void operator()(const BitVector& r) const {
      if (static_cast<int>(r.bits.size()) != k) {
        throw DomainError("bit-vector report length differs from k");
      }
      for (uint8_t bit : r.bits) {
        if (bit > 1) throw DomainError("bit-vector entry is not 0/1");
      }
    }
    void operator()(const RealVector& r) const {
      if (static_cast<int>(r.values.size()) != k) {
        throw DomainError("real-vector report length differs from k");
      }
    }
    void operator()(const Hashed& r) const {
      if (r.g < 2 || r.value < 0 || r.value >= r.g) {
        throw DomainError("hashed report value outside [0, g)");
      }
    }
  };
  std::visit(Visitor{k}, report);
}

}  // namespace ldp_audit
