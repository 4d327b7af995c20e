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

#ifndef RTLSCAN_SUPPRESS_H_
#define RTLSCAN_SUPPRESS_H_

#include <string>
#include <vector>

#include "rtlscan/findings.h"

namespace rtlscan {

// Suppression file format: one 16-digit lowercase-hex fingerprint per
// line, optionally followed by `# reason`. Blank lines and lines that
// are only a comment are ignored. Anything else is a format error.
struct SuppressionList {
  std::vector<std::string> fingerprints;  // in file order, duplicates kept
};

bool parse_suppressions(const std::string& text, SuppressionList* out,
                        std::string* error);

// Removes findings whose fingerprint appears in the list. Returns the
// number removed; *stale receives the fingerprints that matched nothing,
// in file order and deduplicated.
std::uint64_t apply_suppressions(const SuppressionList& list,
                                 std::vector<Finding>* findings,
                                 std::vector<std::string>* stale);

}  // namespace rtlscan

#endif  // RTLSCAN_SUPPRESS_H_
