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

#ifndef RTLSCAN_DRIVER_H_
#define RTLSCAN_DRIVER_H_

#include <map>
#include <string>
#include <vector>

#include "rtlscan/report.h"
#include "rtlscan/rulebook.h"

namespace rtlscan {

struct ScanConfig {
  std::vector<std::string> paths;  // .v/.sv files or directories
  std::vector<int> cwes;           // empty means every scanner
  std::string rules_file;          // empty means built-in defaults
  std::string suppressions_file;   // empty means none
  bool stable_output = false;      // zero out timings
  std::map<int, Severity> severity_overrides;
};

struct ScanResult {
  Report report;
  bool config_error = false;  // bad paths, rules or suppressions; exit 2
  std::string error;
};

// Collects every .v/.sv file reachable from the given paths and orders
// them so that files defining a macro (or being included) come before
// files using it, ties and cycles broken lexicographically. Paths in
// the result are normalized, relative to the working directory when
// possible. Returns false and sets *error for a missing path.
bool discover_files(const std::vector<std::string>& paths,
                    std::vector<std::string>* out, std::string* error);

// Runs the configured scanners over every discovered file with one
// shared macro table, then fingerprints, sorts, suppresses and applies
// severity overrides.
ScanResult run_scan(const ScanConfig& config);

}  // namespace rtlscan

#endif  // RTLSCAN_DRIVER_H_
