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

#ifndef RTLSCAN_STATS_H_
#define RTLSCAN_STATS_H_

#include <cstdint>
#include <map>

namespace rtlscan {

// Work counters for one scanner. Invariant, checked by tests:
// keyword_gated_nodes <= relevant_nodes <= nodes visited in total.
struct ScannerStats {
  std::uint64_t relevant_nodes = 0;
  std::uint64_t keyword_gated_nodes = 0;
  std::uint64_t hits = 0;

  ScannerStats& operator+=(const ScannerStats& o) {
    relevant_nodes += o.relevant_nodes;
    keyword_gated_nodes += o.keyword_gated_nodes;
    hits += o.hits;
    return *this;
  }
};

// Run-wide statistics reported alongside findings.
struct RunStats {
  std::uint64_t files_analyzed = 0;
  std::uint64_t files_skipped = 0;
  std::uint64_t loc = 0;  // lines in analyzed (non-skipped) files
  std::uint64_t total_nodes = 0;
  double parse_ms = 0.0;
  double scan_ms = 0.0;
  std::map<int, ScannerStats> per_scanner;  // keyed by CWE number
};

}  // namespace rtlscan

#endif  // RTLSCAN_STATS_H_
