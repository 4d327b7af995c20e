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

#ifndef RTLSCAN_FINDINGS_H_
#define RTLSCAN_FINDINGS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rtlscan/source_loc.h"

namespace rtlscan {

enum class Severity { kInfo, kWarning, kError };

std::string_view severity_name(Severity s);
std::optional<Severity> severity_from_name(std::string_view name);

// One reported weakness. `kind` is a stable slug per check
// ("debug-override", "missing-reset", "fsm-unreachable", "fsm-deadlock",
// "incomplete-case", "read-before-write", "unprotected-register",
// "less-protected", "non-identical-controls").
struct Finding {
  int cwe = 0;
  std::string kind;
  std::string module;
  SourceLoc loc;
  std::optional<int> line2;           // secondary line (e.g. the write
                                      // paired with a premature read)
  std::vector<std::string> signals;   // identifiers the finding is about
  std::vector<std::string> keywords;  // rule keywords that fired
  Severity severity = Severity::kWarning;
  std::string message;
  std::string fingerprint;  // filled by finalize_findings
};

// 64-bit FNV-1a over the identity fields of a finding. Line numbers are
// deliberately excluded so fingerprints survive unrelated edits; the
// file path is the normalized relative path used in reports.
std::string finding_fingerprint(const Finding& f,
                                const std::string& report_path);

// Sorts findings into the stable report order: (file, line, cwe, kind,
// message, fingerprint).
void sort_findings(std::vector<Finding>& findings);

}  // namespace rtlscan

#endif  // RTLSCAN_FINDINGS_H_
