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

#ifndef RTLSCAN_REPORT_H_
#define RTLSCAN_REPORT_H_

#include <string>
#include <vector>

#include "rtlscan/findings.h"
#include "rtlscan/stats.h"

namespace rtlscan {

// Everything a scan run produces. Findings are sorted and
// fingerprinted; diagnostics explain skipped files and ignored
// constructs; stale_suppressions lists suppression entries that matched
// nothing this run.
struct Report {
  std::vector<Finding> findings;
  RunStats stats;
  DiagnosticList diagnostics;
  std::vector<std::string> stale_suppressions;
  std::uint64_t suppressed_count = 0;
};

// One line per finding:
//   CWE-1271 warning core.v:12 [missing-reset] message (signals: a, b)
// followed by diagnostics and, when with_stats is set, a statistics
// section. Ends with a summary line.
std::string render_text(const Report& report, bool with_stats);

// Stable JSON document: {"version":1, "findings":[...], "stats":{...}}.
// Diagnostics are not part of the schema; callers surface them on
// stderr.
std::string render_json(const Report& report);

}  // namespace rtlscan

#endif  // RTLSCAN_REPORT_H_
