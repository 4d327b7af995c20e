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

#ifndef RTLSCAN_PARSER_H_
#define RTLSCAN_PARSER_H_

#include <memory>
#include <string>
#include <vector>

#include "rtlscan/ast.h"
#include "rtlscan/preprocessor.h"
#include "rtlscan/token.h"

namespace rtlscan {

// Result of parsing one file. A construct outside the supported subset
// marks the whole file skipped: `modules` is empty and at least one
// diagnostic names the offending construct and location. Diagnostics may
// also be present for files that parsed fine (e.g. undefined macros).
struct ParseOutcome {
  std::vector<std::unique_ptr<Module>> modules;
  DiagnosticList diagnostics;
  bool skipped = false;
};

// Parses a preprocessed token stream.
ParseOutcome parse(const TokenList& tokens);

// Convenience pipeline: tokenize + preprocess + parse one source text.
// `macros` persists across calls so definition files feed later ones.
ParseOutcome parse_verilog_source(std::string_view text, std::string_view file,
                                  MacroTable& macros,
                                  const FileReader& reader = default_file_reader());

}  // namespace rtlscan

#endif  // RTLSCAN_PARSER_H_
