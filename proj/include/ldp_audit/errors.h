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

#ifndef LDP_AUDIT_ERRORS_H_
#define LDP_AUDIT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ldp_audit {

// Raised when an argument lies outside the domain of an operation, e.g. a
// non-positive epsilon or a value outside [0, k).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by iterative numerical routines that fail to converge.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

// A report whose variant does not match what the protocol emits.
class ReportMismatchError : public std::invalid_argument {
 public:
  explicit ReportMismatchError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace ldp_audit

#endif  // LDP_AUDIT_ERRORS_H_
