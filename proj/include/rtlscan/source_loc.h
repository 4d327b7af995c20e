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

#ifndef RTLSCAN_SOURCE_LOC_H_
#define RTLSCAN_SOURCE_LOC_H_

#include <string>
#include <vector>

namespace rtlscan {

// Position of a token or syntax node. Lines and columns are 1-based.
struct SourceLoc {
  std::string file;
  int line = 1;
  int col = 1;
};

// A non-fatal problem found while lexing, preprocessing, parsing or
// scanning. Diagnostics never abort a run; a file that cannot be parsed
// is skipped and its diagnostics are carried into the report.
struct Diagnostic {
  SourceLoc loc;
  std::string message;
};

using DiagnosticList = std::vector<Diagnostic>;

}  // namespace rtlscan

#endif  // RTLSCAN_SOURCE_LOC_H_
