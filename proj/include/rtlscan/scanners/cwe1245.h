// Copyright 2026 The rtlscan Authors.
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

// Building blocks of the CWE-1245 (FSM liveness) scanner, exposed so
// tests can check state extraction and case completeness in isolation.

#ifndef RTLSCAN_SCANNERS_CWE1245_H_
#define RTLSCAN_SCANNERS_CWE1245_H_

#include <optional>
#include <string>
#include <vector>

#include "rtlscan/ast.h"
#include "rtlscan/stats.h"

namespace rtlscan {

// One literal state-register assignment reached with a known present
// state. States are normalized label texts (decimal for constants,
// the name for parameters and macros).
struct FsmTransition {
  std::string var;
  std::string from;
  std::string to;
  SourceLoc loc;
  std::vector<std::string> conditions;  // guard texts active at the write
};

// A literal state assignment reached without a known present state
// (typically the reset arm).
struct FsmReset {
  std::string var;
  std::string to;
  SourceLoc loc;
};

// One state-register group: variables connected by direct assignments
// (e.g. state and next_state), with every extracted transition.
struct FsmExtraction {
  std::vector<std::string> vars;  // sorted
  std::vector<FsmTransition> transitions;
  std::vector<FsmReset> resets;
  // Case statements switching on a group variable, for completeness
  // checks. Pointers are owned by the module.
  std::vector<std::pair<const CaseStatement*, std::string>> cases;
};

struct FsmExtractionResult {
  std::vector<FsmExtraction> groups;
  ScannerStats stats;
};

// Finds state-register groups and extracts their transitions. The
// module scope must be built.
FsmExtractionResult extract_fsms(const Module& m, DiagnosticList* diags);

// Whether the case statement covers every value of its width_bits-wide
// selector. Wildcard label bits expand per case kind (casez: z and ?,
// casex: additionally x); labels that cannot be enumerated (parameters,
// macros, expressions) each count as one distinct covered value, which
// errs toward completeness. nullopt when width_bits is not in [1, 20].
std::optional<bool> case_is_complete(const CaseStatement& cs, int width_bits);

// Covered-value count used by case_is_complete, exposed for tests:
// number of distinct enumerated selector values plus distinct opaque
// labels. nullopt under the same conditions as case_is_complete.
std::optional<std::uint64_t> case_cover_count(const CaseStatement& cs,
                                              int width_bits);

}  // namespace rtlscan

#endif  // RTLSCAN_SCANNERS_CWE1245_H_
