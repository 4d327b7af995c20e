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

#ifndef RTLSCAN_SCANNERS_SCANNERS_H_
#define RTLSCAN_SCANNERS_SCANNERS_H_

#include <span>
#include <vector>

#include "rtlscan/ast.h"
#include "rtlscan/findings.h"
#include "rtlscan/rulebook.h"
#include "rtlscan/stats.h"

namespace rtlscan {

// Every scanner analyzes one module (scope already built) and appends
// findings. Returned counters feed the per-scanner run statistics.
using ScanFn = ScannerStats (*)(const Module&, const Rulebook&,
                                std::vector<Finding>*, DiagnosticList*);

struct ScannerInfo {
  int cwe;
  const char* check_name;
  ScanFn fn;
};

// All registered scanners, ordered by CWE number.
std::span<const ScannerInfo> all_scanners();

ScannerStats scan_cwe1234(const Module& m, const Rulebook& rules,
                          std::vector<Finding>* findings,
                          DiagnosticList* diags);
ScannerStats scan_cwe1245(const Module& m, const Rulebook& rules,
                          std::vector<Finding>* findings,
                          DiagnosticList* diags);
ScannerStats scan_cwe1262(const Module& m, const Rulebook& rules,
                          std::vector<Finding>* findings,
                          DiagnosticList* diags);
ScannerStats scan_cwe1271(const Module& m, const Rulebook& rules,
                          std::vector<Finding>* findings,
                          DiagnosticList* diags);
ScannerStats scan_cwe1280(const Module& m, const Rulebook& rules,
                          std::vector<Finding>* findings,
                          DiagnosticList* diags);

}  // namespace rtlscan

#endif  // RTLSCAN_SCANNERS_SCANNERS_H_
